"""Render the eight cubic subdivisions and the bi-degree (2, 4) family to SVG."""
import json
from pathlib import Path

from tropicount import DivisorSpec, subdivisions
from tropicount.example_w2d import w2d_family, w2d_index_set, w2d_polygon
from tropicount.svg import render_svg, subdivision_record

out = Path(__file__).parent / "figures"
out.mkdir(exist_ok=True)

for j, sub in enumerate(subdivisions(DivisorSpec.plane(3), 0)):
    (out / f"cubic_{j}.svg").write_text(render_svg(sub, title=f"cubic {j}"))
    (out / f"cubic_{j}.json").write_text(json.dumps(subdivision_record(sub), indent=1))

fam = w2d_family(4)
print("(2,4) family by k:", {k: (v["paths"], v["seeds"], v["coefficients"]) for k, v in fam.by_k.items()})
for j, sub in enumerate(subdivisions(w2d_polygon(4), 5, w2d_index_set(4))):
    (out / f"w2d4_{j}.svg").write_text(render_svg(sub))
print("wrote", len(list(out.glob("*.svg"))), "figures to", out)
