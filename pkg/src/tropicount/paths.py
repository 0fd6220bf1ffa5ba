"""Enumeration of (λ⁰, I)-admissible lattice paths."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .lattice import LAMBDA0, LatticePolygon, Point, integer_length


class Infeasible(ValueError):
    """The number of imaginary pairs is too large for the polygon (2m > r)."""


@dataclass(frozen=True)
class IndexSet:
    """Positions (1-based) of the path edges reserved for imaginary pairs."""

    indices: tuple[int, ...]
    n_edges: int

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if len(idx) != len(self.indices):
            raise ValueError("duplicate indices")
        object.__setattr__(self, "indices", idx)
        if idx and (idx[0] < 1 or idx[-1] > self.n_edges):
            raise ValueError(f"indices {idx} out of range 1..{self.n_edges}")

    @classmethod
    def for_polygon(cls, poly: LatticePolygon, indices: Iterable[int]) -> "IndexSet":
        idx = tuple(indices)
        m = len(idx)
        if 2 * m > poly.r:
            raise Infeasible(f"2m = {2 * m} exceeds r = {poly.r}")
        return cls(idx, poly.r - m)

    @classmethod
    def default(cls, poly: LatticePolygon, m: int) -> "IndexSet":
        if m < 0 or 2 * m > poly.r:
            raise Infeasible(f"m = {m} out of range for r = {poly.r}")
        return cls(tuple(range(1, m + 1)), poly.r - m)

    @property
    def m(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __iter__(self):
        return iter(self.indices)


def all_index_sets(poly: LatticePolygon, m: int) -> list[IndexSet]:
    if m < 0 or 2 * m > poly.r:
        raise Infeasible(f"m = {m} out of range for r = {poly.r}")
    n = poly.r - m
    return [IndexSet(c, n) for c in combinations(range(1, n + 1), m)]


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: tuple[Point, ...]
    index_set: IndexSet

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i - 1], v[i]) for i in range(1, len(v))]

    def edge(self, i: int) -> tuple[Point, Point]:
        """The i-th edge, 1-based as in the index set."""
        return self.vertices[i - 1], self.vertices[i]

    def lengths(self) -> list[int]:
        return [integer_length(a, b) for a, b in self.edges]

    def __len__(self):
        return len(self.vertices) - 1


class _PathTables:
    """Per-(polygon, I) lookup tables shared by the enumerator and checker."""

    def __init__(self, poly: LatticePolygon, slope_prune: bool = False):
        self.poly = poly
        self.pts = poly.lattice_points
        self.index = {p: i for i, p in enumerate(self.pts)}
        n = len(self.pts)
        self.length = [[0] * n for _ in range(n)]
        # room[a][b]: whether some point of Δ off [a, b] sits strictly between them in λ order
        self.room = [[False] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                ln = integer_length(self.pts[a], self.pts[b])
                self.length[a][b] = ln
                self.room[a][b] = (b - a - 1) > (ln - 1)
        self.slope_prune = slope_prune
        if slope_prune:
            self.s_min = poly.s_min

    def edge_ok(self, a: int, b: int, in_i: bool) -> bool:
        ln = self.length[a][b]
        if self.slope_prune:
            pa, pb = self.pts[a], self.pts[b]
            if pa[0] != pb[0]:
                s = Fraction(pb[1] - pa[1], pb[0] - pa[0])
                if s < self.s_min:
                    return False
                if (not in_i or ln % 2 == 0) and s < self.s_min + 1:
                    return False
        if not in_i:
            return ln % 2 == 1
        return ln % 2 == 0 or self.room[a][b]


def first_vertices(poly: LatticePolygon, index_set: IndexSet, slope_prune: bool = False) -> list[Point]:
    """Possible second vertices v1; the search tree splits into these subtrees."""
    t = _PathTables(poly, slope_prune)
    p, q = poly.extremal_vertices()
    ip, iq = t.index[p], t.index[q]
    k = index_set.n_edges
    out = []
    for b in range(ip + 1, iq + 1):
        if iq - b < k - 1 or (k == 1 and b != iq):
            continue
        if t.edge_ok(ip, b, 1 in index_set):
            out.append(t.pts[b])
    return out


def enumerate_paths(
    poly: LatticePolygon,
    index_set: IndexSet,
    *,
    prefix: Sequence[Point] | None = None,
    slope_prune: bool = False,
) -> Iterator[AdmissiblePath]:
    """Yield every admissible path exactly once, in lexicographic λ order.

    ``prefix`` restricts the search to paths starting with the given
    vertices (it must start with ``p``); this is how work is split between
    workers.
    """
    t = _PathTables(poly, slope_prune)
    p, q = poly.extremal_vertices()
    iq = t.index[q]
    k = index_set.n_edges
    in_i = [False] + [i in index_set for i in range(1, k + 1)]
    if prefix is None:
        prefix = (p,)
    prefix = tuple(prefix)
    if prefix[0] != p:
        return
    stack = [t.index[v] for v in prefix]
    for i in range(1, len(stack)):
        if stack[i] <= stack[i - 1] or not t.edge_ok(stack[i - 1], stack[i], in_i[i]):
            return
    if len(stack) - 1 > k:
        return

    pts = t.pts

    def rec(path: list[int]):
        cur = path[-1]
        done = len(path) - 1
        left = k - done
        if left == 0:
            if cur == iq:
                yield AdmissiblePath(tuple(pts[i] for i in path), index_set)
            return
        edge_idx = done + 1
        flag = in_i[edge_idx]
        if left == 1:
            if t.edge_ok(cur, iq, flag):
                path.append(iq)
                yield from rec(path)
                path.pop()
            return
        for nxt in range(cur + 1, iq - left + 2):
            if t.edge_ok(cur, nxt, flag):
                path.append(nxt)
                yield from rec(path)
                path.pop()

    yield from rec(list(stack))


def check_admissible(
    poly: LatticePolygon, vertices: Sequence[Point], index_set: IndexSet
) -> tuple[bool, str]:
    """Return ``(ok, reason)``; ``reason`` names the first violated clause."""
    vertices = tuple(tuple(v) for v in vertices)
    p, q = poly.extremal_vertices()
    if len(vertices) - 1 != index_set.n_edges:
        return False, f"path has {len(vertices) - 1} edges, needs r - m = {index_set.n_edges}"
    if vertices[0] != p:
        return False, f"path must start at p = {p}"
    if vertices[-1] != q:
        return False, f"path must end at q = {q}"
    for v in vertices:
        if not poly.contains(v):
            return False, f"vertex {v} lies outside the polygon"
    key = LAMBDA0.key
    for i in range(1, len(vertices)):
        if not key(vertices[i - 1]) < key(vertices[i]):
            return False, f"λ not strictly increasing at edge {i}"
    t = _PathTables(poly)
    for i in range(1, len(vertices)):
        a, b = t.index[vertices[i - 1]], t.index[vertices[i]]
        ln = t.length[a][b]
        if i not in index_set:
            if ln % 2 == 0:
                return False, f"edge {i} not in I has even length {ln}"
        elif ln % 2 == 1 and not t.room[a][b]:
            return False, f"edge {i} in I is odd with no lattice point strictly between its ends"
    return True, "ok"


def count_paths(poly: LatticePolygon, index_set: IndexSet, **kw) -> int:
    return sum(1 for _ in enumerate_paths(poly, index_set, **kw))


def split_prefixes(poly: LatticePolygon, index_set: IndexSet, depth: int = 2,
                   slope_prune: bool = False) -> list[tuple[Point, ...]]:
    """Disjoint path prefixes covering the whole search tree, in λ order.

    Each prefix has ``depth`` edges (fewer if the path is already complete);
    feeding every prefix to :func:`enumerate_paths` yields every path once.
    """
    t = _PathTables(poly, slope_prune)
    p, q = poly.extremal_vertices()
    iq = t.index[q]
    k = index_set.n_edges
    out = []

    def rec(path: list[int]):
        done = len(path) - 1
        if done == min(depth, k):
            out.append(tuple(t.pts[i] for i in path))
            return
        left = k - done
        flag = (done + 1) in index_set
        cur = path[-1]
        nxts = [iq] if left == 1 else range(cur + 1, iq - left + 2)
        for nxt in nxts:
            if t.edge_ok(cur, nxt, flag):
                path.append(nxt)
                rec(path)
                path.pop()

    rec([t.index[p]])
    return out
