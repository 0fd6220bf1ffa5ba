"""Subdivision records and deterministic SVG rendering."""
from __future__ import annotations

import json
from typing import Any

from .compress import ArithmeticInconsistency, Inconsistent, Subdivision, cell_from_vertex_set, replay_subdivision
from .lattice import InvalidDivisor, LatticePolygon
from .paths import AdmissiblePath, IndexSet, check_admissible

SUB_SCHEMA = "tropicount.subdivision/1"
SCALE = 40
MARGIN = 30


class MalformedRecord(ValueError):
    pass


def subdivision_record(sub: Subdivision) -> dict:
    return {
        "schema": SUB_SCHEMA,
        "polygon": [list(v) for v in sub.polygon.vertices],
        "name": sub.polygon.name,
        "path": [list(v) for v in sub.path.vertices],
        "indexSet": list(sub.path.index_set.indices),
        "apexes": [[i, list(p)] for i, p in sub.apexes],
        "cells": [[list(p) for p in c] for c in sorted(sub.cells)],
        "coefficient": str(sub.coefficient),
    }


def load_subdivision(rec: Any) -> Subdivision:
    """Rebuild and re-certify a subdivision from its record (replay must agree)."""
    if isinstance(rec, str):
        try:
            rec = json.loads(rec)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"not JSON: {exc}") from None
    if not isinstance(rec, dict) or rec.get("schema") != SUB_SCHEMA:
        raise MalformedRecord("missing or unknown schema")
    try:
        poly = LatticePolygon([tuple(v) for v in rec["polygon"]], rec.get("name") or "")
        path = tuple(tuple(v) for v in rec["path"])
        I = IndexSet(tuple(rec["indexSet"]), len(path) - 1)
        cells = [cell_from_vertex_set(tuple(p) for p in c) for c in rec["cells"]]
        apexes = {int(i): tuple(p) for i, p in rec["apexes"]}
        coef = int(rec["coefficient"])
    except (KeyError, TypeError, ValueError, InvalidDivisor, ArithmeticInconsistency) as exc:
        raise MalformedRecord(f"bad field: {exc}") from None
    ok, why = check_admissible(poly, path, I)
    if not ok:
        raise MalformedRecord(f"path not admissible: {why}")
    try:
        sub = replay_subdivision(poly, AdmissiblePath(path, I), apexes, cells)
    except (Inconsistent, ValueError, ArithmeticInconsistency) as exc:
        raise MalformedRecord(f"replay failed: {exc}") from None
    if sub.coefficient != coef:
        raise MalformedRecord(f"recorded coefficient {coef} but replay gives {sub.coefficient}")
    return sub


def _xy(p, h):
    return MARGIN + p[0] * SCALE, MARGIN + (h - p[1]) * SCALE


def _pts(ps, h) -> str:
    return " ".join("%d,%d" % _xy(p, h) for p in ps)


FILL = {3: "#f4c27a", 4: "#8fbce6"}


def render_svg(sub: Subdivision | None = None, *, polygon: LatticePolygon | None = None,
               title: str = "") -> str:
    """SVG 1.1 text: lattice points, the polygon, cells, the path and the coefficient."""
    poly = sub.polygon if sub is not None else polygon
    if poly is None:
        raise ValueError("nothing to draw")
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    x0, y0 = min(xs), min(ys)
    shift = lambda p: (p[0] - x0, p[1] - y0)
    w, h = max(xs) - x0, max(ys) - y0
    W, H = 2 * MARGIN + w * SCALE, 2 * MARGIN + h * SCALE + 20
    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
           '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
           f"<title>{title or poly.name or 'subdivision'}</title>",
           '<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (W, H)]
    if sub is not None:
        for cc in sorted(sub.cells):
            col = "#c9a0dc" if cc in sub.s0 else FILL[len(cc)]
            out.append(f'<polygon points="{_pts([shift(p) for p in cc], h)}" fill="{col}" '
                       'stroke="#555555" stroke-width="1"/>')
    out.append(f'<polygon points="{_pts([shift(v) for v in poly.vertices], h)}" fill="none" '
               'stroke="black" stroke-width="2"/>')
    for p in poly.lattice_points:
        cx, cy = _xy(shift(p), h)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="2.5" fill="black"/>')
    if sub is not None:
        out.append(f'<polyline points="{_pts([shift(p) for p in sub.path.vertices], h)}" fill="none" '
                   'stroke="#d62728" stroke-width="3"/>')
        out.append(f'<text x="{MARGIN}" y="{H - 8}" font-family="monospace" font-size="14">'
                   f'coefficient {sub.coefficient:+d}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
