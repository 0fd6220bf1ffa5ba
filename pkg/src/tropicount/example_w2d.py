"""W for bi-degree (2, d) with the maximal number d+1 of imaginary pairs.

Only a thin family of paths contributes: after a vertical unit first edge
the path has exactly one unit edge of slope 1, and ``k + 1`` vertical even
edges against ``k`` even edges of slope 1.  Each such path has
``2^(d-2k-1)`` seeds and every seed completes uniquely with coefficient
``2^(2k)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .compress import build_seeds, compress_all
from .lattice import LatticePolygon, integer_length, rectangle, slope
from .paths import IndexSet, enumerate_paths


def w2d_polygon(d: int) -> LatticePolygon:
    # the d x 2 rectangle; its r = 2d + 3 leaves room for m = d + 1
    return rectangle(d, 2)


def w2d_index_set(d: int) -> IndexSet:
    return IndexSet(tuple(range(2, d + 3)), d + 2)


def w2d_top(d: int) -> int:
    """Sum over k of (seeds per path) x (coefficient per seed)."""
    if d < 1:
        raise ValueError("d >= 1")
    return sum(2 ** (d - 2 * k - 1) * 2 ** (2 * k) for k in range((d - 1) // 2 + 1))


@dataclass
class W2dPathFamily:
    d: int
    by_k: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(v["sum"] for v in self.by_k.values())


def w2d_family(d: int) -> W2dPathFamily:
    """Run the general engine and sort contributing paths by k, checking the claims."""
    poly = w2d_polygon(d)
    I = w2d_index_set(d)
    fam = W2dPathFamily(d)
    acc = defaultdict(lambda: {"paths": 0, "seeds": 0, "sum": 0, "coefficients": set()})
    for path in enumerate_paths(poly, I):
        subs = []
        seeds = 0
        for seed in build_seeds(poly, path):
            got = list(compress_all(seed, consistent_only=True))
            if got:
                seeds += 1
            if len(got) > 1:
                fam.violations.append(f"{path.vertices}: seed completes in {len(got)} ways")
            subs += got
        if not subs:
            continue
        edges = path.edges
        unit_diag = sum(1 for a, b in edges if integer_length(a, b) == 1 and slope(a, b) == 1)
        even = [(a, b) for a, b in edges if integer_length(a, b) % 2 == 0]
        vert = sum(1 for a, b in even if a[0] == b[0])
        slanted = len(even) - vert
        if unit_diag != 1 or vert != slanted + 1:
            fam.violations.append(f"{path.vertices}: {unit_diag} unit slope-1 edges, {vert} vertical vs {slanted} slanted even")
        k = slanted
        if seeds != 2 ** (d - 2 * k - 1):
            fam.violations.append(f"{path.vertices}: {seeds} seeds, expected {2 ** (d - 2 * k - 1)}")
        e = acc[k]
        e["paths"] += 1
        e["seeds"] += seeds
        for s in subs:
            e["sum"] += s.coefficient
            e["coefficients"].add(s.coefficient)
            if s.coefficient != 2 ** (2 * k):
                fam.violations.append(f"{path.vertices}: coefficient {s.coefficient}, expected {2 ** (2 * k)}")
    fam.by_k = {k: {**v, "coefficients": sorted(v["coefficients"])} for k, v in sorted(acc.items())}
    return fam
