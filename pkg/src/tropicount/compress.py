"""Seeds, the branching compressing procedure and consistency of subdivisions.

The growing set ``S_k`` is kept as two λ-monotone vertex paths from ``p`` to
``q``: the upper walk (``S_k`` on its right) and the lower walk (``S_k`` on
its left).  A fillable notch is a strict left turn of the upper walk or a
strict right turn of the lower walk.  Cells added on one side never interact
with the other side, so the two walks are compressed independently and the
completed tilings are combined as a product; taking notches in global λ order
gives the same set of outcomes.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .lattice import (
    LAMBDA0,
    LatticePolygon,
    Point,
    double_area,
    integer_length,
    interior_points_count,
    turn,
)
from .paths import AdmissiblePath, IndexSet

Cell = tuple[Point, ...]


class ArithmeticInconsistency(RuntimeError):
    """A triangle's parity pattern matches none of the multiplicity cases."""


class DuplicateSubdivision(RuntimeError):
    pass


def make_cell(points: Sequence[Point]) -> Cell:
    """Counterclockwise vertex tuple rotated to start at the smallest vertex."""
    pts = list(points)
    s = 0
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        s += p[0] * q[1] - p[1] * q[0]
    if s == 0:
        raise ArithmeticInconsistency(f"degenerate cell {pts}")
    if s < 0:
        pts.reverse()
    k = pts.index(min(pts))
    return tuple(pts[k:] + pts[:k])


def cell_from_vertex_set(points: Iterable[Point]) -> Cell:
    """Rebuild the cyclic order of a triangle or parallelogram from its vertices."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) == 3:
        return make_cell(pts)
    if len(pts) != 4:
        raise ValueError(f"cell must have 3 or 4 vertices: {pts}")
    a = pts[0]
    # the vertex opposite to a is the one for which the other two lie on different sides
    for j in (1, 2, 3):
        others = [pts[k] for k in (1, 2, 3) if k != j]
        t1, t2 = turn(a, pts[j], others[0]), turn(a, pts[j], others[1])
        if t1 * t2 < 0:
            return make_cell([a, others[0], pts[j], others[1]])
    raise ValueError(f"not a convex quadrilateral: {pts}")


def cell_edges(cell: Cell) -> list[tuple[Point, Point]]:
    n = len(cell)
    return [edge_key(cell[i], cell[(i + 1) % n]) for i in range(n)]


def edge_key(a: Point, b: Point) -> tuple[Point, Point]:
    return (a, b) if a <= b else (b, a)


def strip_collinear(path: Sequence[Point]) -> tuple[Point, ...]:
    out = [path[0]]
    for i in range(1, len(path) - 1):
        if turn(out[-1], path[i], path[i + 1]) != 0:
            out.append(path[i])
    out.append(path[-1])
    return tuple(out)


def triangle_factor(u: Point, v: Point, w: Point) -> int | None:
    """Signed factor for closing the notch ``u, v, w`` by a triangle.

    Returns ``None`` when the option is forbidden (two odd sides at ``v``
    and an even third side).
    """
    l1 = integer_length(u, v)
    l2 = integer_length(v, w)
    l3 = integer_length(u, w)
    odd1, odd2 = l1 % 2, l2 % 2
    if odd1 and odd2 and l3 % 2 == 0:
        return None
    area = double_area((u, v, w))
    inner = interior_points_count((u, v, w))
    if area % 2:
        if not (odd1 and odd2 and l3 % 2):
            raise ArithmeticInconsistency(f"odd area with an even side in {(u, v, w)}")
        a, mult = inner, 1
    elif odd1 and odd2:
        raise ArithmeticInconsistency(f"even area with odd sides at the notch {(u, v, w)}")
    elif odd1 or odd2:
        even = l2 if odd1 else l1
        if area % even:
            raise ArithmeticInconsistency(f"|T| = {area} not divisible by {even}")
        a, mult = inner, area // even
    else:
        if (2 * area) % (l1 * l2):
            raise ArithmeticInconsistency(f"2|T| = {2 * area} not divisible by {l1 * l2}")
        a, mult = inner + 1, 2 * area // (l1 * l2)
    return -mult if a % 2 else mult


@dataclass(frozen=True)
class SeedComplex:
    """``S_0``: the path together with the triangles on odd edges of ``I``."""

    polygon: LatticePolygon
    path: AdmissiblePath
    apexes: tuple[tuple[int, Point], ...]
    triangles: tuple[Cell, ...]
    a: int
    coefficient: int
    upper: tuple[Point, ...]
    lower: tuple[Point, ...]


def _seed_candidates(poly: LatticePolygon, path: AdmissiblePath) -> list[tuple[int, list[Point]]]:
    key = LAMBDA0.key
    pts = poly.lattice_points
    index = {p: i for i, p in enumerate(pts)}
    out = []
    for i in path.index_set:
        a, b = path.edge(i)
        if integer_length(a, b) % 2 == 0:
            continue
        cands = []
        for c in pts[index[a] + 1: index[b]]:
            if turn(a, b, c) == 0:
                continue
            if integer_length(a, c) % 2 and integer_length(c, b) % 2:
                cands.append(c)
        assert all(key(a) < key(c) < key(b) for c in cands)
        out.append((i, cands))
    return out


def make_seed(poly: LatticePolygon, path: AdmissiblePath, apexes: Mapping[int, Point]) -> SeedComplex:
    """Assemble ``S_0`` for explicit apex choices (validated)."""
    key = LAMBDA0.key
    upper = list(path.vertices)
    lower = list(path.vertices)
    up_ins, lo_ins = {}, {}
    tris = []
    a_count = 0
    coef = 1
    needed = {i for i in path.index_set if integer_length(*path.edge(i)) % 2}
    if set(apexes) != needed:
        raise ValueError(f"apexes given for {sorted(apexes)}, need exactly {sorted(needed)}")
    for i, c in sorted(apexes.items()):
        u, v = path.edge(i)
        c = tuple(c)
        if not poly.contains(c) or turn(u, v, c) == 0 or not key(u) < key(c) < key(v):
            raise ValueError(f"invalid apex {c} for edge {i}")
        if integer_length(u, c) % 2 == 0 or integer_length(c, v) % 2 == 0:
            raise ValueError(f"apex {c} splits edge {i} into non-odd pieces")
        tri = make_cell((u, v, c))
        tris.append(tri)
        area = double_area(tri)
        coef *= area
        a_count += interior_points_count(tri)
        (up_ins if turn(u, v, c) > 0 else lo_ins)[i] = c
    for ins, walk in ((up_ins, upper), (lo_ins, lower)):
        for i in sorted(ins, reverse=True):
            walk.insert(i, ins[i])
    if a_count % 2:
        coef = -coef
    return SeedComplex(poly, path, tuple(sorted(apexes.items())), tuple(tris), a_count, coef,
                       tuple(upper), tuple(lower))


def build_seeds(poly: LatticePolygon, path: AdmissiblePath) -> Iterator[SeedComplex]:
    """All seed complexes of a path; empty when some odd edge of I has no apex."""
    cands = _seed_candidates(poly, path)
    if any(not c for _, c in cands):
        return
    idx = [i for i, _ in cands]
    for choice in product(*(c for _, c in cands)):
        yield make_seed(poly, path, dict(zip(idx, choice)))


@dataclass
class CompressStats:
    terminal: int = 0
    dead_convex: int = 0
    blocked: int = 0
    boundary_rejects: int = 0


@dataclass(frozen=True)
class Subdivision:
    polygon: LatticePolygon
    path: AdmissiblePath
    apexes: tuple[tuple[int, Point], ...]
    cells: tuple[Cell, ...]
    coefficient: int
    s0: frozenset = field(default_factory=frozenset)

    @property
    def canonical(self) -> tuple[tuple[Point, ...], ...]:
        return tuple(sorted(tuple(sorted(c)) for c in self.cells))

    def edges(self) -> set[tuple[Point, Point]]:
        return {e for c in self.cells for e in cell_edges(c)}

    def boundary_edges(self) -> list[tuple[Point, Point]]:
        cnt = Counter(e for c in self.cells for e in cell_edges(c))
        return sorted(e for e, k in cnt.items() if k == 1)


def _compress_side(
    poly: LatticePolygon,
    walk: tuple[Point, ...],
    upper: bool,
    target: tuple[Point, ...],
    check_boundary: bool,
    stats: CompressStats | None,
) -> list[tuple[tuple[Cell, ...], int]]:
    """Complete one side of ``S_0``; returns (cells, signed factor) per outcome."""
    inside = poly.point_set
    sgn = 1 if upper else -1
    results = []

    def rec(w: tuple[Point, ...], cells: list[Cell], coef: int):
        notch = None
        for j in range(1, len(w) - 1):
            if sgn * turn(w[j - 1], w[j], w[j + 1]) > 0:
                notch = j
                break
        if notch is None:
            if strip_collinear(w) != target:
                if stats:
                    stats.dead_convex += 1
                return
            if check_boundary and any(integer_length(w[i], w[i + 1]) > 2 for i in range(len(w) - 1)):
                if stats:
                    stats.boundary_rejects += 1
                return
            if stats:
                stats.terminal += 1
            results.append((tuple(cells), coef))
            return
        u, v, x = w[notch - 1], w[notch], w[notch + 1]
        moved = False
        z = (u[0] + x[0] - v[0], u[1] + x[1] - v[1])
        if z in inside:
            moved = True
            cells.append(make_cell((u, v, x, z)))
            rec(w[:notch] + (z,) + w[notch + 1:], cells, coef)
            cells.pop()
        f = triangle_factor(u, v, x)
        if f is not None:
            moved = True
            cells.append(make_cell((u, v, x)))
            rec(w[:notch] + w[notch + 1:], cells, coef * f)
            cells.pop()
        if not moved and stats:
            stats.blocked += 1

    rec(tuple(walk), [], 1)
    return results


def compress_all(
    seed: SeedComplex,
    *,
    consistent_only: bool = False,
    stats: CompressStats | None = None,
) -> Iterator[Subdivision]:
    """All tilings of Δ reachable from ``seed`` by the compressing rules.

    With ``consistent_only`` the stream is filtered by :func:`is_consistent`
    (boundary lengths are checked per side, which prunes early).
    """
    poly = seed.polygon
    up_chain, lo_chain = poly.chains
    ups = _compress_side(poly, seed.upper, True, up_chain, consistent_only, stats)
    if not ups:
        return
    los = _compress_side(poly, seed.lower, False, lo_chain, consistent_only, stats)
    seen = set()
    s0 = frozenset(seed.triangles)
    for (uc, uf), (lc, lf) in product(ups, los):
        cells = tuple(sorted(seed.triangles + uc + lc))
        sub = Subdivision(poly, seed.path, seed.apexes, cells, seed.coefficient * uf * lf, s0)
        canon = sub.canonical
        if canon in seen:
            raise DuplicateSubdivision(f"subdivision produced twice: {canon}")
        seen.add(canon)
        if sum(double_area(c) for c in cells) != poly.double_area:
            raise ArithmeticInconsistency("completed cells do not tile the polygon")
        if consistent_only and dual_components(cells) != 1:
            continue
        yield sub


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = self.parent.setdefault(p, p)
            x, p = p, self.parent[p]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def dual_components(cells: Iterable[Cell]) -> int:
    """Number of components of the dual tropical curve.

    Every triangle is a trivalent vertex joining its three edges; a
    parallelogram is a crossing of two strands, each joining one pair of
    opposite edges.  Strands glue along shared subdivision edges.
    """
    dsu = _DSU()
    for c in cells:
        es = cell_edges(c)
        if len(c) == 3:
            dsu.union(es[0], es[1])
            dsu.union(es[1], es[2])
        else:
            dsu.find(es[1])
            dsu.find(es[3])
            dsu.union(es[0], es[2])
            dsu.union(es[1], es[3])
    return len({dsu.find(e) for e in list(dsu.parent)})


def is_consistent(sub: Subdivision | Sequence[Cell], poly: LatticePolygon | None = None) -> tuple[bool, str]:
    """Boundary edges of length at most two and an irreducible dual curve."""
    if isinstance(sub, Subdivision):
        cells, poly = sub.cells, sub.polygon
    else:
        cells = tuple(sub)
    cnt = Counter(e for c in cells for e in cell_edges(c))
    for e, k in cnt.items():
        if k == 1 and poly.segment_on_boundary(*e) and integer_length(*e) > 2:
            return False, f"boundary edge {e} has integer length {integer_length(*e)} > 2"
    comps = dual_components(cells)
    if comps != 1:
        return False, f"reducible: dual curve has {comps} components"
    return True, "ok"


class Inconsistent(Exception):
    pass


def replay(
    poly: LatticePolygon,
    path: AdmissiblePath,
    apexes: Mapping[int, Point],
    cells: Iterable[Sequence[Point]],
) -> int | None:
    """Re-derive a proposed subdivision by forced compression.

    At every notch the branch must be the cell of ``cells`` sitting on it.
    Returns the Welschinger coefficient, or ``None`` when the tiling cannot
    be produced from this path and seed or is not consistent.
    """
    try:
        return replay_subdivision(poly, path, apexes, cells).coefficient
    except Inconsistent:
        return None


def replay_subdivision(poly, path, apexes, cells) -> Subdivision:
    cellset = {make_cell(c) for c in cells}
    try:
        seed = make_seed(poly, path, dict(apexes))
    except ValueError as exc:
        raise Inconsistent(str(exc)) from exc
    for t in seed.triangles:
        if t not in cellset:
            raise Inconsistent(f"seed triangle {t} missing from the tiling")
    used = set(seed.triangles)
    coef = seed.coefficient
    up_chain, lo_chain = poly.chains
    for walk, sgn, target in ((seed.upper, 1, up_chain), (seed.lower, -1, lo_chain)):
        w = tuple(walk)
        while True:
            notch = next((j for j in range(1, len(w) - 1) if sgn * turn(w[j - 1], w[j], w[j + 1]) > 0), None)
            if notch is None:
                break
            u, v, x = w[notch - 1], w[notch], w[notch + 1]
            z = (u[0] + x[0] - v[0], u[1] + x[1] - v[1])
            par = make_cell((u, v, x, z))
            tri = make_cell((u, v, x))
            if par in cellset and z in poly.point_set:
                used.add(par)
                w = w[:notch] + (z,) + w[notch + 1:]
            elif tri in cellset:
                f = triangle_factor(u, v, x)
                if f is None:
                    raise Inconsistent(f"triangle {tri} violates the parity rule")
                used.add(tri)
                coef *= f
                w = w[:notch] + w[notch + 1:]
            else:
                raise Inconsistent(f"no cell of the tiling fills the notch at {v}")
        if strip_collinear(w) != target:
            raise Inconsistent("compression stopped before reaching the boundary")
    if used != cellset:
        raise Inconsistent(f"{len(cellset - used)} cells never used by the compression")
    sub = Subdivision(poly, path, seed.apexes, tuple(sorted(cellset)), coef, frozenset(seed.triangles))
    ok, why = is_consistent(sub)
    if not ok:
        raise Inconsistent(why)
    return sub


def consistent_subdivisions(poly: LatticePolygon, path: AdmissiblePath,
                            stats: CompressStats | None = None) -> Iterator[Subdivision]:
    for seed in build_seeds(poly, path):
        yield from compress_all(seed, consistent_only=True, stats=stats)
