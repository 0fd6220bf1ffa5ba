import json
import xml.etree.ElementTree as ET

import pytest

from tropicount.invariants import subdivisions
from tropicount.lattice import DivisorSpec, polygon_for
from tropicount.svg import MalformedRecord, load_subdivision, render_svg, subdivision_record

NS = "{http://www.w3.org/2000/svg}"


def test_unit_triangle_svg():
    (s,) = subdivisions(DivisorSpec.plane(1), 0)
    root = ET.fromstring(render_svg(s).split("\n", 2)[2])
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    filled = [p for p in root.iter(NS + "polygon") if p.get("fill") != "none"]
    assert len(filled) == 1
    assert any("coefficient +1" in (t.text or "") for t in root.iter(NS + "text"))


def test_deterministic_and_parseable():
    for s in list(subdivisions(DivisorSpec.plane(3), 1))[:3]:
        a, b = render_svg(s), render_svg(s)
        assert a == b
        assert a.startswith("<?xml") and "<!DOCTYPE svg" in a
        ET.fromstring(a.split("\n", 2)[2])


def test_polygon_only():
    svg = render_svg(polygon=polygon_for(DivisorSpec.quadric(2, 3)), title="Q")
    assert "<title>Q</title>" in svg and "polyline" not in svg
    with pytest.raises(ValueError):
        render_svg()


def test_record_roundtrip():
    for s in subdivisions(DivisorSpec.quadric(2, 2), 1):
        rec = json.loads(json.dumps(subdivision_record(s)))
        back = load_subdivision(rec)
        assert back.coefficient == s.coefficient
        assert sorted(back.cells) == sorted(s.cells)


@pytest.mark.parametrize("mutate", [
    lambda r: r.update(schema="other"),
    lambda r: r.update(coefficient="7"),
    lambda r: r["cells"].pop(),
    lambda r: r.update(path=r["path"][::-1]),
    lambda r: r.update(polygon=[[0, 0], [1, 1]]),
    lambda r: r.pop("apexes"),
])
def test_malformed_records(mutate):
    s = next(iter(subdivisions(DivisorSpec.plane(3), 2)))
    rec = subdivision_record(s)
    mutate(rec)
    with pytest.raises(MalformedRecord):
        load_subdivision(rec)
    with pytest.raises(MalformedRecord):
        load_subdivision("{not json")
