"""Chains of edges in a consistent subdivision and the structural lemmas.

Two non-vertical edges are linked when they are opposite sides of a
parallelogram, or two sides of a triangle that is not one of the seed
triangles of ``S_0``.  Following links away from an edge until the polygon
boundary is reached gives its escaping chains.  The checkers below return
lists of human readable violations (empty means the lemma holds).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .compress import Subdivision, cell_edges, dual_components, edge_key
from .lattice import integer_length, interior_points_count

Edge = tuple[tuple[int, int], tuple[int, int]]


class StructuralViolation(RuntimeError):
    """A subdivision contradicts one of the structural lemmas."""


def edge_slope(e: Edge) -> Fraction | None:
    (x0, y0), (x1, y1) = e
    if x0 == x1:
        return None
    return Fraction(y1 - y0, x1 - x0)


def horizontal_extent(e: Edge) -> int:
    return abs(e[1][0] - e[0][0])


class _Adjacency:
    def __init__(self, sub: Subdivision):
        self.sub = sub
        self.cells_of: dict[Edge, list] = defaultdict(list)
        for c in sub.cells:
            for e in cell_edges(c):
                self.cells_of[e].append(c)
        self.s0 = set(sub.s0)

    def partner(self, cell, e: Edge) -> Edge:
        es = cell_edges(cell)
        if len(cell) == 4:
            return es[(es.index(e) + 2) % 4]
        others = [x for x in es if x != e and edge_slope(x) is not None]
        if len(others) != 1:
            raise StructuralViolation(f"triangle {cell} has no vertical side to pass the chain through")
        return others[0]

    def follow(self, e: Edge, cell) -> tuple[tuple[Edge, ...], bool]:
        """Walk from ``e`` into ``cell``; returns (chain, escaped)."""
        chain = [e]
        seen = {e}
        while True:
            if cell in self.s0:
                return tuple(chain), False
            nxt = self.partner(cell, e)
            if nxt in seen:
                raise StructuralViolation(f"chain through {e} closes up")
            chain.append(nxt)
            seen.add(nxt)
            further = [c for c in self.cells_of[nxt] if c != cell]
            if not further:
                return tuple(chain), True
            e, cell = nxt, further[0]

    def escaping_chains(self, e: Edge) -> list[tuple[Edge, ...]]:
        out = []
        cells = self.cells_of[e]
        if len(cells) == 1:
            # an edge on the boundary is its own one-edge escaping chain
            out.append((e,))
        for c in cells:
            chain, escaped = self.follow(e, c)
            if escaped:
                out.append(chain)
        return out


@dataclass(frozen=True)
class ChainAnalysis:
    subdivision: Subdivision
    chains: tuple[tuple[Edge, ...], ...]
    escaping: dict
    components: int

    def terminal(self, chain: tuple[Edge, ...]) -> Edge:
        return chain[-1]


def _s0_edges(sub: Subdivision) -> list[Edge]:
    out = [edge_key(a, b) for a, b in sub.path.edges]
    for t in sub.s0:
        for e in cell_edges(t):
            if e not in out:
                out.append(e)
    return out


def chain_analysis(sub: Subdivision) -> ChainAnalysis:
    adj = _Adjacency(sub)
    # link graph on non-vertical edges
    links: dict[Edge, set] = defaultdict(set)
    for c in sub.cells:
        if c in adj.s0:
            continue
        es = [e for e in cell_edges(c) if edge_slope(e) is not None]
        if len(c) == 4:
            pairs = [(cell_edges(c)[0], cell_edges(c)[2]), (cell_edges(c)[1], cell_edges(c)[3])]
            pairs = [p for p in pairs if edge_slope(p[0]) is not None]
        else:
            pairs = [(es[i], es[j]) for i in range(len(es)) for j in range(i + 1, len(es))]
        for a, b in pairs:
            links[a].add(b)
            links[b].add(a)
    nonvert = sorted({e for e in adj.cells_of if edge_slope(e) is not None})
    seen = set()
    chains = []
    for e in nonvert:
        if e in seen:
            continue
        comp, stack = [], [e]
        seen.add(e)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in links[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        chains.append(tuple(sorted(comp)))
    escaping = {e: adj.escaping_chains(e) for e in _s0_edges(sub) if edge_slope(e) is not None}
    return ChainAnalysis(sub, tuple(chains), escaping, dual_components(sub.cells))


def sign_by_formula(sub: Subdivision) -> int:
    """Sign predicted from the slopes at the ends of the escaping chains."""
    adj = _Adjacency(sub)
    total = Fraction(0)
    for a, b in sub.path.edges:
        e = edge_key(a, b)
        if edge_slope(e) is None or integer_length(a, b) % 2:
            continue
        chains = adj.escaping_chains(e)
        if len(chains) != 2:
            raise StructuralViolation(f"even path edge {e} has {len(chains)} escaping chains, expected 2")
        total += edge_slope(chains[0][-1]) - edge_slope(chains[1][-1])
    if total.denominator != 1:
        raise StructuralViolation(f"slope differences sum to a non-integer {total}")
    return -1 if int(total) % 2 else 1


def check_edge_extent(sub: Subdivision) -> list[str]:
    """Horizontal extent bounds on edges and the triangle corollaries."""
    bad = []
    for e in sub.edges():
        ln = integer_length(*e)
        lim = 2 if ln % 2 == 0 else 1
        if horizontal_extent(e) > lim:
            bad.append(f"edge {e} of length {ln} spans {horizontal_extent(e)} columns")
    for c in sub.cells:
        if len(c) != 3:
            continue
        es = cell_edges(c)
        lens = [integer_length(*e) for e in es]
        if all(edge_slope(e) is not None for e in es):
            bad.append(f"triangle {c} has no vertical side")
        if any(ln % 2 for ln in lens) and interior_points_count(c):
            bad.append(f"triangle {c} with an odd side has interior points")
        if any(edge_slope(e) is not None and ln % 2 == 0 for e, ln in zip(es, lens)):
            if any(ln % 2 for ln in lens):
                bad.append(f"triangle {c} has a non-vertical even side but is not even")
    return bad


def check_slopes(sub: Subdivision) -> list[str]:
    bad = []
    smin = sub.polygon.s_min
    for e in sub.edges():
        s = edge_slope(e)
        if s is not None and s < smin:
            bad.append(f"edge {e} has slope {s} below s_min = {smin}")
    for i, (a, b) in enumerate(sub.path.edges, 1):
        s = edge_slope((a, b))
        if s is None:
            continue
        if (i not in sub.path.index_set or integer_length(a, b) % 2 == 0) and s < smin + 1:
            bad.append(f"path edge {i} has slope {s} below s_min + 1")
    return bad


def check_escaping_chains(sub: Subdivision) -> list[str]:
    bad = []
    try:
        ca = chain_analysis(sub)
    except StructuralViolation as exc:
        return [str(exc)]
    index_set = sub.path.index_set
    for i, (a, b) in enumerate(sub.path.edges, 1):
        e = edge_key(a, b)
        if edge_slope(e) is None:
            continue
        if i not in index_set or integer_length(a, b) % 2 == 0:
            n = len(ca.escaping[e])
            if n != 2:
                bad.append(f"path edge {i} has {n} escaping chains")
    for t in sub.s0:
        for e in cell_edges(t):
            if edge_slope(e) is None or e in {edge_key(a, b) for a, b in sub.path.edges}:
                continue
            n = len(ca.escaping[e])
            if n != 1:
                bad.append(f"seed side {e} has {n} escaping chains")
    path_edges = {edge_key(a, b) for a, b in sub.path.edges}
    used: dict[Edge, Edge] = {}
    for start, chains in ca.escaping.items():
        for ch in chains:
            par = {integer_length(*x) % 2 for x in ch}
            if len(par) > 1:
                bad.append(f"parity changes along the chain of {start}")
            if all(x not in path_edges for x in ch[1:]):
                sl = [edge_slope(x) for x in ch]
                if any(sl[j + 1] > sl[j] for j in range(len(sl) - 1)):
                    bad.append(f"slopes increase along the chain of {start}")
            for x in ch[1:]:
                if x in used and used[x] != start:
                    bad.append(f"chains of {used[x]} and {start} meet at {x}")
                used.setdefault(x, start)
    covered = set(used) | set(ca.escaping)
    for e in sub.edges():
        if edge_slope(e) is not None and e not in covered:
            bad.append(f"edge {e} lies on no escaping chain")
    return bad


def check_sign_formula(sub: Subdivision) -> list[str]:
    try:
        s = sign_by_formula(sub)
    except StructuralViolation as exc:
        return [str(exc)]
    actual = 1 if sub.coefficient > 0 else -1
    if sub.coefficient == 0 or s != actual:
        return [f"sign formula gives {s:+d}, coefficient is {sub.coefficient}"]
    return []


LEMMA_CHECKS = {
    "edge-extent": check_edge_extent,
    "slopes": check_slopes,
    "escaping-chains": check_escaping_chains,
    "sign-formula": check_sign_formula,
}


def lemma_violations(subs: Iterable[Subdivision]) -> dict[str, list[str]]:
    """Run every structural check over ``subs``; maps check name to failures."""
    out: dict[str, list[str]] = {k: [] for k in LEMMA_CHECKS}
    for sub in subs:
        for name, fn in LEMMA_CHECKS.items():
            out[name].extend(fn(sub))
    return out
