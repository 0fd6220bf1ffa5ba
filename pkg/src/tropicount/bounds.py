"""Explicit families of consistent subdivisions giving lower bounds for W.

Each family is built along a fixed unit-step path.  The two sides of the
path are cut into strips of width one (vertical, horizontal or of slope 1)
and every strip is packed with primitive parallelograms plus as few
primitive triangles as its shape allows.  A strip whose two long sides have
``a`` and ``b`` lattice units can be packed in ``C(min(a,b) + |a-b|, |a-b|)``
ways, and strips are independent, so a family count is a product.

For small parameters the family is also materialized: the compressing
procedure is run on the path, the outcomes matching the strip pattern are
kept, and every member is re-derived by :func:`~tropicount.compress.replay`.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np

from .compress import (
    Subdivision,
    _compress_side,
    build_seeds,
    cell_edges,
    make_cell,
    replay_subdivision,
)
from .lattice import DivisorSpec, LatticePolygon, Point, double_area, polygon_for, rectangle
from .paths import IndexSet, check_admissible, enumerate_paths


class ScheduleInfeasible(ValueError):
    """No admissible (b1, b2) split for the requested number of imaginary pairs."""


# -- square sequence and the plane family ---------------------------------

@dataclass(frozen=True)
class SquareSequence:
    """Right upper corners ``(x_i, y_i)`` of the inscribed maximal squares, ``i >= 0``."""

    n: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @classmethod
    def build(cls, n: int) -> "SquareSequence":
        if n < 1:
            raise ValueError("n >= 1")
        xs, ys = [0], [n]
        y = n // 2
        x = y
        while y > 0:
            xs.append(x)
            ys.append(y)
            y = (n - x) // 2
            x = x + y
        return cls(n, tuple(xs), tuple(ys))

    @property
    def squares(self) -> list[int]:
        """Side lengths y_1, y_2, ... (all positive)."""
        return list(self.ys[1:])

    def check(self) -> bool:
        """y_i <= n - x_i <= 2 y_{i+1} + 1 wherever the terms exist (y_{k+1} = 0)."""
        ys = list(self.ys) + [0]
        return all(ys[i] <= self.n - self.xs[i] <= 2 * ys[i + 1] + 1 for i in range(len(self.xs)))


def plane_count(n: int) -> int:
    """Product formula for the plane family."""
    out = 1
    for y in SquareSequence.build(n).squares:
        f = math.factorial(y)
        out *= f * math.factorial(y + 1) // 2 ** y * f
    return out


def log_plane_count(n: int) -> float:
    s = 0.0
    for y in SquareSequence.build(n).squares:
        s += 2 * math.lgamma(y + 1) + math.lgamma(y + 2) - y * math.log(2)
    return s


def _unit_steps(a: Point, b: Point) -> list[Point]:
    g = math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
    dx, dy = (b[0] - a[0]) // g, (b[1] - a[1]) // g
    return [(a[0] + k * dx, a[1] + k * dy) for k in range(1, g + 1)]


def plane_path(n: int, origin: Point = (0, 0)) -> tuple[Point, ...]:
    """Unit-step path of length 3n - 1 from (0, n) to (n, 0)."""
    sq = SquareSequence.build(n)
    pts = [(0, n)]
    xs, ys = list(sq.xs), list(sq.ys) + [0]
    for i in range(len(sq.xs)):
        x, ynext = xs[i], ys[i + 1]
        if ynext == 0:
            break
        pts += _unit_steps(pts[-1], (x, ynext - 1))
        for k in range(ynext):
            pts.append((x + k + 1, ynext))
            if k < ynext - 1:
                pts.append((x + k + 1, ynext - 1))
    pts += _unit_steps(pts[-1], (n - 1, 0))
    pts.append((n, 0))
    ox, oy = origin
    return tuple((x + ox, y + oy) for x, y in pts)


def quadric_path(n: int, d1: int, d2: int) -> tuple[Point, ...]:
    """Unit-step path of length 2n(d1 + d2) - 1 in the quadric parallelogram."""
    N1, N2 = n * d1, n * d2
    a = N2 // 2
    if a == 0:
        # N2 = 1: visit every lattice point of the two rows in λ order
        pts = [(0, 1)]
        for x in range(1, N1 + 1):
            pts += [(x, 1), (x, 0)]
        pts.append((N1 + 1, 0))
        return tuple(pts)
    pts = [(x, N2) for x in range(a)]
    x, y = a - 1, N2
    vertical_first = a >= 2
    while (x, y) != (N2, a - 1):
        if vertical_first:
            pts += [(x, y - 1), (x + 1, y - 1)]
        else:
            pts += [(x + 1, y), (x + 1, y - 1)]
        x, y = x + 1, y - 1
    s = N1 - a
    for k in range(s):
        pts.append((N2 + k + 1, a))
        if k < s - 1:
            pts.append((N2 + k + 1, a - 1))
    pts += list(plane_path(a, origin=(N1 + N2 - a, 0))[1:])
    return tuple(pts)


# -- strip geometry ---------------------------------------------------------

_DIRS: dict[str, Callable[[Point], tuple[int, int]]] = {
    "v": lambda p: (p[0], p[1]),
    "d": lambda p: (p[0] - p[1], p[1]),
    "h": lambda p: (p[1], p[0]),
}


def _section(poly_uv: Sequence[tuple[Fraction, Fraction]], u0: Fraction) -> Fraction:
    vs = []
    n = len(poly_uv)
    for i in range(n):
        (u1, v1), (u2, v2) = poly_uv[i], poly_uv[(i + 1) % n]
        if (u1 < u0 < u2) or (u2 < u0 < u1):
            vs.append(v1 + (v2 - v1) * (u0 - u1) / (u2 - u1))
    vs.sort()
    if len(vs) % 2:
        raise ValueError("open region")
    pieces = [vs[i + 1] - vs[i] for i in range(0, len(vs), 2)]
    if sum(1 for p in pieces if p) > 1:
        raise ValueError("strip meets the region in several pieces")
    return sum(pieces, Fraction(0))


def strip_sides(region: Sequence[Point], direction: str) -> list[tuple[int, int, int]]:
    """(c, a, b) for every strip ``c <= u <= c+1`` meeting the region with positive area."""
    f = _DIRS[direction]
    uv = [tuple(map(Fraction, f(p))) for p in region]
    us = [u for u, _ in uv]
    out = []
    for c in range(int(min(us)), int(max(us))):
        l1 = _section(uv, Fraction(c) + Fraction(1, 4))
        l3 = _section(uv, Fraction(c) + Fraction(3, 4))
        if not l1 and not l3:
            continue
        slope = (l3 - l1) * 2
        a, b = l1 - slope / 4, l3 + slope / 4
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"strip {c} has non-integral sides {a}, {b}")
        out.append((c, int(a), int(b)))
    return out


def strip_count(a: int, b: int) -> int:
    t = abs(a - b)
    return math.comb(min(a, b) + t, t)


def log_strip_count(a: int, b: int) -> float:
    t = abs(a - b)
    p = min(a, b)
    return math.lgamma(p + t + 1) - math.lgamma(p + 1) - math.lgamma(t + 1)


def _clip(region: Sequence[Point], keep: Callable[[Point], int]) -> list:
    """Sutherland-Hodgman against the half plane ``keep(p) >= 0`` (keep is affine)."""
    out = []
    n = len(region)
    for i in range(n):
        p, q = region[i], region[(i + 1) % n]
        fp, fq = keep(p), keep(q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 and fq < 0) or (fp < 0 and fq > 0):
            t = Fraction(fp, fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def side_regions(poly: LatticePolygon, path: Sequence[Point]) -> tuple[list, list]:
    """Closed vertex lists of the parts above and below the path."""
    upper, lower = poly.chains
    plus = list(path) + list(reversed(upper))[1:-1]
    minus = list(path) + list(reversed(lower))[1:-1]
    return plus, minus


def _product_over(region, direction):
    sides = strip_sides(region, direction)
    exact = 1
    logc = 0.0
    for _, a, b in sides:
        exact *= strip_count(a, b)
        logc += log_strip_count(a, b)
    return exact, logc, sides


# -- the family record --------------------------------------------------------

@dataclass
class BoundFamily:
    kind: str
    label: str
    n: int
    count: int
    log_count: float
    path: tuple[Point, ...] | None = None
    members: list[Subdivision] = field(default_factory=list)
    certified: bool | None = None
    details: dict = field(default_factory=dict)

    @property
    def materialized(self) -> int | None:
        return self.details.get("materialized")

    def summary(self) -> dict:
        return {"kind": self.kind, "label": self.label, "n": self.n, "count": str(self.count),
                "log_count": self.log_count, "certified": self.certified,
                **{k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                   for k, v in self.details.items()}}


def _primitive(cell) -> bool:
    return double_area(cell) == (1 if len(cell) == 3 else 2)


def _strip_ok(cells: Iterable, direction_of: Callable) -> bool:
    """Every cell primitive and inside one strip; each strip has its triangles on one side."""
    bases: dict = {}
    for c in cells:
        if not _primitive(c):
            return False
        d = direction_of(c)
        if d is None:
            return False
        f = _DIRS[d]
        us = [f(p)[0] for p in c]
        lo, hi = min(us), max(us)
        if hi - lo != 1:
            return False
        if len(c) == 3:
            base = lo if sum(1 for u in us if u == lo) == 2 else hi
            prev = bases.setdefault((d, lo), base)
            if prev != base:
                return False
    return True


def materialize(poly: LatticePolygon, path: Sequence[Point], up_dir: Callable, lo_dir: Callable,
                limit: int | None = None) -> tuple[list[Subdivision], int, int]:
    """Strip-pattern members of the compressing outcomes along a real path.

    Returns (members, upper choices, lower choices).  Members are produced
    by replay, so each carries its engine-derived coefficient.
    """
    I = IndexSet((), len(path) - 1)
    ok, why = check_admissible(poly, path, I)
    if not ok:
        raise ValueError(f"family path is not admissible: {why}")
    from .paths import AdmissiblePath

    ap = AdmissiblePath(tuple(path), I)
    seed = next(build_seeds(poly, ap))
    up_chain, lo_chain = poly.chains
    ups = [c for c, _ in _compress_side(poly, seed.upper, True, up_chain, True, None) if _strip_ok(c, up_dir)]
    los = [c for c, _ in _compress_side(poly, seed.lower, False, lo_chain, True, None) if _strip_ok(c, lo_dir)]
    members = []
    for uc, lc in product(ups, los):
        if limit is not None and len(members) >= limit:
            break
        try:
            members.append(replay_subdivision(poly, ap, (), uc + lc))
        except Exception:
            # reducible or otherwise not consistent; not part of the family
            continue
    return members, len(ups), len(los)


def _certify(members: Sequence[Subdivision], positive_only: bool = False) -> bool:
    if not members:
        return False
    if positive_only:
        return all(s.coefficient > 0 for s in members)
    return all(s.coefficient == 1 for s in members)


MATERIALIZE_CAP = 4


def plane_family(n: int, materialize_up_to: int = MATERIALIZE_CAP) -> BoundFamily:
    """Plane family of degree n: count M_n, strip product, and (small n) replayed members."""
    poly = polygon_for(DivisorSpec.plane(n))
    path = plane_path(n)
    plus, minus = side_regions(poly, path)
    up_exact, up_log, _ = _product_over(plus, "v")
    lo_exact, lo_log, _ = _product_over(minus, "d")
    fam = BoundFamily("plane", f"P2(d={n})", n, plane_count(n), log_plane_count(n), path)
    fam.details.update({"path_length": len(path) - 1, "strip_product": up_exact * lo_exact,
                        "log_strip_product": up_log + lo_log})
    if n <= materialize_up_to:
        members, nu, nl = materialize(poly, path, lambda c: "v", lambda c: "d")
        fam.members = members
        fam.certified = _certify(members) and len({m.canonical for m in members}) == len(members)
        fam.details.update({"materialized": len(members), "upper_choices": nu, "lower_choices": nl})
    return fam


def quadric_family(n: int, d1: int, d2: int, materialize_up_to: int = 14) -> BoundFamily:
    """Pure-real quadric family; members materialized while r <= ``materialize_up_to``."""
    if not d1 >= d2 >= 1:
        raise ValueError("quadric family needs d1 >= d2 >= 1")
    spec = DivisorSpec.quadric(n * d1, n * d2)
    poly = polygon_for(spec)
    path = quadric_path(n, d1, d2)
    N2 = n * d2
    plus, minus = side_regions(poly, path)
    up_exact, up_log, _ = _product_over(plus, "v")
    left = _clip(minus, lambda p: N2 - p[0])
    right = _clip(minus, lambda p: p[0] - N2)
    ex_l, log_l = (1, 0.0)
    if len(left) >= 3:
        ex_l, log_l, _ = _product_over(left, "h")
    ex_r, log_r = (1, 0.0)
    if len(right) >= 3:
        ex_r, log_r, _ = _product_over(right, "d")
    count = up_exact * ex_l * ex_r
    fam = BoundFamily("quadric", f"Q({n * d1}, {n * d2})", n, count, up_log + log_l + log_r, path)
    fam.details.update({"path_length": len(path) - 1, "d1": d1, "d2": d2})
    if poly.r <= materialize_up_to:
        lo_dir = lambda c: "h" if max(p[0] for p in c) <= N2 else ("d" if min(p[0] for p in c) >= N2 else None)
        members, nu, nl = materialize(poly, path, lambda c: "v", lo_dir)
        fam.members = members
        fam.certified = _certify(members) and len({m.canonical for m in members}) == len(members)
        fam.details.update({"materialized": len(members), "upper_choices": nu, "lower_choices": nl})
    return fam


def quadric_count(A: int, B: int) -> tuple[int, float]:
    """Family count for bi-degree (A, B) in either order; 1 for a degenerate block."""
    if A < 0 or B < 0:
        raise ScheduleInfeasible(f"negative bi-degree ({A}, {B})")
    if A == 0 or B == 0:
        return 1, 0.0
    f = quadric_family(1, max(A, B), min(A, B), materialize_up_to=-1)
    return f.count, f.log_count


# -- reductions for the blown-up planes ------------------------------------

def _trapeze_factor(heights: Iterable[int]) -> tuple[int, float]:
    """Vertical unit strips over a slope -1 edge: left height h gives h packings."""
    ex, lg = 1, 0.0
    for h in heights:
        ex *= h
        lg += math.log(h)
    return ex, lg


def _p2_shape(W: int, H: int, c: int) -> tuple[int, float, dict]:
    """Rectangle W x H with the upper right corner cut by c (the P2 polygon)."""
    rect_w = W - c
    qc, ql = quadric_count(rect_w, H)
    tf, tl = _trapeze_factor(range(H, H - c, -1))
    return qc * tf, ql + tl, {"rectangle": (rect_w, H), "trapeze_heights": (H, H - c + 1)}


def pk_reduction(n: int, spec: DivisorSpec, materialize_up_to: int = 9) -> BoundFamily:
    """Lower-bound family for n·D on a blown-up plane via a quadric block."""
    if spec.surface != "blown":
        raise ValueError("pk_reduction needs a blown-up plane")
    d, *ds = (n * x for x in spec.degrees)
    label = spec.scaled(n).label
    if spec.k == 1:
        (e1,) = ds
        qc, ql = quadric_count(e1, d - e1)
        tf = math.factorial(d - e1)
        fam = BoundFamily("P1-reduction", label, n, qc * tf, ql + math.lgamma(d - e1 + 1))
        fam.details.update({"rectangle": (e1, d - e1), "factor": tf})
    elif spec.k == 2:
        e1, e2 = ds
        ex, lg, det = _p2_shape(d - e1, d - e2, d - e1 - e2)
        fam = BoundFamily("P2-reduction", label, n, ex, lg)
        fam.details.update(det)
    else:
        e1, e2, e3 = ds
        # split at x = e2: a P2-shaped left part (rotated) and a trapeze
        if e3 > e2 or d - e2 <= e3:
            raise ScheduleInfeasible(f"{label}: no vertical split leaves a P2-shaped part")
        ex, lg, det = _p2_shape(e2, d - e2, e3)
        tf, tl = _trapeze_factor(range(d - e2, e1, -1))
        fam = BoundFamily("P3-reduction", label, n, ex * tf, lg + tl)
        fam.details.update({"left": det, "factor": tf})
    poly = polygon_for(spec.scaled(n))
    if poly.r <= materialize_up_to and spec.k == 1:
        _materialize_p1(fam, poly, d, ds[0])
    return fam


def _materialize_p1(fam: BoundFamily, poly: LatticePolygon, d: int, e1: int) -> None:
    """Complete every positive subdivision of the rectangle block by triangle strips."""
    rect = rectangle(e1, d - e1)
    I = IndexSet((), rect.r)
    tail = tuple((x, 0) for x in range(e1 + 1, d + 1))
    members, left_parts = [], 0
    per_left = []
    from .paths import AdmissiblePath

    for g1 in enumerate_paths(rect, I):
        for seed in build_seeds(rect, g1):
            from .compress import compress_all

            for sub in compress_all(seed, consistent_only=True):
                if sub.coefficient <= 0:
                    continue
                left_parts += 1
                path = g1.vertices + tail
                ap = AdmissiblePath(path, IndexSet((), len(path) - 1))
                done = 0
                for s in _triangle_completions(poly, ap, sub.cells, e1, d):
                    members.append(s)
                    done += 1
                per_left.append(done)
    fam.members = members
    fam.certified = _certify(members, positive_only=True) and all(k == fam.details["factor"] for k in per_left)
    fam.details.update({"materialized": len(members), "left_parts": left_parts})


def _triangle_completions(poly, ap, left_cells, x0, d):
    seed = next(build_seeds(poly, ap))
    up_chain, _ = poly.chains
    outs = _compress_side(poly, seed.upper, True, up_chain, True, None)
    left = {make_cell(c) for c in left_cells}
    for cells, _ in outs:
        lc = {c for c in cells if max(p[0] for p in c) <= x0}
        rc = [c for c in cells if min(p[0] for p in c) >= x0]
        if len(lc) + len(rc) != len(cells):
            continue
        upper_left = {c for c in left if c in lc}
        if upper_left != lc:
            continue
        if not _strip_ok(rc, lambda c: "v"):
            continue
        allc = set(left) | set(rc)
        try:
            yield replay_subdivision(poly, ap, (), tuple(allc))
        except Exception:
            continue


# -- mixed configurations on the quadric ----------------------------------

@dataclass(frozen=True)
class AsymptoticSchedule:
    """m(n) = round(mu·n + psi(n)), clipped to [0, (d1 + d2) n)."""

    mu: Fraction
    psi: Callable[[int], int] | None = None

    def m(self, n: int, d1: int, d2: int) -> int:
        v = self.mu * n + (self.psi(n) if self.psi else 0)
        m = int(math.floor(v + Fraction(1, 2)))
        return max(0, min(m, (d1 + d2) * n - 1))


def mixed_index_set(n: int, d1: int, d2: int, m: int) -> tuple[int, ...]:
    N1, N2 = n * d1, n * d2
    r = 2 * (N1 + N2) - 1
    if not 1 <= m < N1 + N2:
        raise ScheduleInfeasible(f"m = {m} outside 1..{N1 + N2 - 1}")
    if m == N1 + N2 - 1:
        if N1 % 2 and N2 % 2 and m >= 3:
            return tuple(range(1, m - 1)) + (m, m + 1)
        return tuple(range(2, m + 2))
    j = 2 * (N1 + N2 - m) - 1
    out = (j,) + tuple(range(j + 2, j + m + 1))
    assert len(out) == m and out[-1] <= r - m
    return out


def _b_split(total: int, N1: int, N2: int, m: int, ok: Callable[[int, int], bool]) -> tuple[int, int]:
    target = Fraction(N1 * m, 2 * (N1 + N2))
    cands = sorted(range(0, total // 2 + 1), key=lambda b: (abs(b - target), b))
    for b1 in cands:
        b2 = total // 2 - b1
        if b2 >= 0 and ok(b1, b2):
            return b1, b2
    raise ScheduleInfeasible(f"no (b1, b2) with 2b1 + 2b2 = {total}")


def mixed_family(n: int, d1: int, d2: int, schedule: AsymptoticSchedule | int,
                 certify_up_to: int = 9) -> BoundFamily:
    """Family for m imaginary pairs on the quadric, as a product of pure-real blocks."""
    N1, N2 = n * d1, n * d2
    m = schedule if isinstance(schedule, int) else schedule.m(n, d1, d2)
    if not 1 <= m < N1 + N2:
        raise ScheduleInfeasible(f"m = {m} outside 1..{N1 + N2 - 1}")
    I = mixed_index_set(n, d1, d2, m)
    blocks: list[tuple[int, int]] = []
    if m == N1 + N2 - 1:
        if N1 % 2 == 0 and N2 % 2 == 0:
            case, blocks = "top-even-even", [(N1 // 2 - 1, N2 // 2)]
        elif N1 % 2 and N2 % 2:
            case, blocks = "top-odd-odd", [((N1 - 1) // 2, (N2 - 1) // 2)]
        else:
            a, b = (N1, N2) if N1 % 2 else (N2, N1)
            case, blocks = "top-odd-even", [((a - 1) // 2, b // 2)]
        b1 = b2 = None
    elif m % 2:
        case = "odd-m"
        b1, b2 = _b_split(m + 1, N1, N2, m, lambda x, y: x >= 1 and N1 - 2 * x >= 0 and N2 - 2 * y >= 0)
        blocks = [(N1 - 2 * b1, N2 - 2 * b2), (b1 - 1, b2)]
    else:
        case = "even-m"
        b1, b2 = _b_split(m, N1, N2, m, lambda x, y: N1 - 2 * x - 1 >= 0 and N2 - 2 * y >= 0)
        blocks = [(N1 - 2 * b1 - 1, N2 - 2 * b2), (b1, b2)]
    if any(x < 0 for blk in blocks for x in blk):
        raise ScheduleInfeasible(f"negative block in {blocks}")
    ex, lg = 1, 0.0
    for A, B in blocks:
        c, l = quadric_count(A, B)
        ex *= c
        lg += l
    fam = BoundFamily(f"mixed({case})", f"Q({N1}, {N2}), m={m}", n, ex, lg)
    fam.details.update({"m": m, "index_set": list(I), "b1": b1, "b2": b2, "blocks": blocks})
    rect = rectangle(N1, N2)
    if rect.r <= certify_up_to:
        members = []
        for g in enumerate_paths(rect, IndexSet.for_polygon(rect, I)):
            for seed in build_seeds(rect, g):
                from .compress import compress_all

                members.extend(compress_all(seed, consistent_only=True))
        fam.members = members
        fam.certified = _certify(members, positive_only=True)
        fam.details["materialized"] = len(members)
        fam.details["witness_sum"] = sum(s.coefficient for s in members)
    return fam


# -- asymptotics ----------------------------------------------------------------

@dataclass
class AsymptoticReport:
    kind: str
    a: float
    rows: list[tuple[int, float, float]]
    fit: dict = field(default_factory=dict)

    @property
    def increasing(self) -> bool:
        r = [x[2] for x in self.rows]
        return all(r[i] < r[i + 1] for i in range(len(r) - 1))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "log_count", "ratio"])
        for n, lc, ratio in self.rows:
            w.writerow([n, f"{lc:.12g}", f"{ratio:.12g}"])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "a": self.a, "increasing": self.increasing, "fit": self.fit,
                           "series": [{"n": n, "log_count": lc, "ratio": r} for n, lc, r in self.rows]},
                          indent=1, sort_keys=True)


def _fit(rows) -> dict:
    """Least squares of log count against n·ln n and n."""
    if len(rows) < 3:
        return {}
    n = np.array([r[0] for r in rows], dtype=float)
    y = np.array([r[1] for r in rows])
    X = np.column_stack([n * np.log(n), n])
    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    return {"nlogn": float(coef[0]), "n": float(coef[1])}


def asymptotic_report(kind: str, grid: Iterable[int], d1: int = 1, d2: int = 1,
                      mu: Fraction | int = 0) -> AsymptoticReport:
    """Ratios log(count) / (a·n·ln n) with a = c1·D (or 2d1 + 2d2 - mu for mixed)."""
    rows = []
    if kind == "plane":
        a = 3.0
        for n in grid:
            rows.append((n, log_plane_count(n)))
    elif kind == "quadric":
        a = 2.0 * (d1 + d2)
        for n in grid:
            rows.append((n, quadric_family(n, max(d1, d2), min(d1, d2), materialize_up_to=-1).log_count))
    elif kind == "mixed":
        a = float(2 * d1 + 2 * d2 - Fraction(mu))
        sch = AsymptoticSchedule(Fraction(mu))
        for n in grid:
            rows.append((n, mixed_family(n, d1, d2, sch, certify_up_to=-1).log_count))
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    out = [(n, lc, lc / (a * n * math.log(n))) for n, lc in rows]
    return AsymptoticReport(kind, a, out, _fit(out))
