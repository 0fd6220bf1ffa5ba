"""Explicit families of positive subdivisions and the n log n growth they give.

Writes plane_ratios.csv and plane_ratios.json next to this script.
"""
from pathlib import Path

from tropicount import DivisorSpec, welschinger
from tropicount.bounds import asymptotic_report, mixed_family, pk_reduction, plane_family, quadric_family

for n in (3, 4, 5):
    fam = plane_family(n)
    extra = f", {fam.materialized} packings built, all +1: {fam.certified}" if fam.materialized else ""
    print(f"plane n={n}: M_n = {fam.count}{extra}")
print("  vs W(3,0) = 8, W(4,0) =", welschinger(DivisorSpec.plane(4), 0).value)

fam = quadric_family(1, 3, 2)
print(f"quadric (3,2): {fam.count} members, path of {len(fam.path) - 1} edges, certified {fam.certified}")
fam = pk_reduction(1, DivisorSpec.blown(1, 4, 2))
print(f"trapeze P1(4; 2): {fam.count} from the reduction, {fam.materialized} built")
fam = mixed_family(1, 3, 2, 2)
print(f"mixed Q(3,2) with 2 pairs: blocks {fam.details['blocks']}, I = {fam.details['index_set']}, "
      f"positive witnesses {fam.details['materialized']}")

rep = asymptotic_report("plane", [2 ** k for k in range(5, 13)])
for n, _, ratio in rep.rows:
    print(f"  n = {n:5d}  log M_n / (3 n ln n) = {ratio:.4f}")
print("  fit log M_n ~ %.3f n ln n + %.3f n" % (rep.fit["nlogn"], rep.fit["n"]))

here = Path(__file__).parent
(here / "plane_ratios.csv").write_text(rep.to_csv())
(here / "plane_ratios.json").write_text(rep.to_json() + "\n")
