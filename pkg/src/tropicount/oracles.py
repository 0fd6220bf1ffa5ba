"""Independent values used to validate the enumeration engine.

Closed forms, the genus-0 recursion for plane curves, and exact solution of
the finite-difference systems produced by wall-crossing.  Differences are
forward differences, ``Δf(m) = f(m+1) - f(m)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, factorial
from typing import Callable, Mapping, Sequence


class OutOfRange(ValueError):
    pass


class Inconsistent(ValueError):
    """An over-determined difference system has contradictory constraints."""


@dataclass(frozen=True)
class GWResult:
    degree: int
    N: int


@lru_cache(maxsize=None)
def _kontsevich(d: int) -> int:
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        w = d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
        total += _kontsevich(d1) * _kontsevich(d2) * w
    return total


def kontsevich_N(d: int, cap: int = 12) -> GWResult:
    """Number of complex rational plane curves of degree d through 3d-1 points."""
    if not 1 <= d <= cap:
        raise OutOfRange(f"degree {d} outside 1..{cap}")
    return GWResult(d, _kontsevich(d))


def gw_bounds(d: int) -> tuple[Fraction, int]:
    """The factorial bracket (3d-4)!/54^d <= N_d <= (3d-5)!, valid for d >= 3."""
    if d < 3:
        raise OutOfRange("the bracket is stated for d >= 3")
    return Fraction(factorial(3 * d - 4), 54 ** d), factorial(3 * d - 5)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced a non-integer {x}")
    return int(x)


def _falling(m: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= m - j
    return out


def cubic(m: int) -> int:
    if not 0 <= m <= 4:
        raise OutOfRange(f"plane cubics need 0 <= m <= 4, got {m}")
    return 8 - 2 * m


def quartic(m: int) -> int:
    if not 0 <= m <= 5:
        raise OutOfRange(f"plane quartics need 0 <= m <= 5, got {m}")
    v = Fraction(-4, 3) * _falling(m, 3) + 16 * _falling(m, 2) - 96 * m + 240
    return _as_int(v)


def quintic(m: int) -> int:
    if not 0 <= m <= 7:
        raise OutOfRange(f"plane quintics need 0 <= m <= 7, got {m}")
    v = (Fraction(4, 45) * _falling(m, 6) - Fraction(32, 15) * _falling(m, 5) + 32 * _falling(m, 4)
         - 320 * _falling(m, 3) + 2172 * _falling(m, 2) - 9168 * m + 18264)
    return _as_int(v)


def bidegree_d2(d: int, m: int) -> int:
    """W for bi-degree (d, 2): (d+m)·2^(2d-2-m) for m <= d, and the top value at m = d+1."""
    if d < 1 or not 0 <= m <= d + 1:
        raise OutOfRange(f"bi-degree ({d},2) needs d >= 1 and 0 <= m <= d+1")
    if m == d + 1:
        return bidegree_d2_top(d)
    return _as_int((d + m) * Fraction(2) ** (2 * d - 2 - m))


def bidegree_d2_top(d: int) -> int:
    if d < 1:
        raise OutOfRange("d >= 1")
    return ((d + 1) // 2) * 2 ** (d - 1)


def bidegree_2d_real(d: int) -> int:
    """W_{(2,d),0} = d·2^(2d-2)."""
    if d < 1:
        raise OutOfRange("d >= 1")
    return d * 2 ** (2 * d - 2)


def gw_2d(d: int) -> int:
    """N_{(2,d)} = d(d+1)·2^(2d-3)."""
    if d < 1:
        raise OutOfRange("d >= 1")
    return _as_int(d * (d + 1) * Fraction(2) ** (2 * d - 3))


CLOSED_FORMS: dict[str, Callable[..., int]] = {
    "cubic": cubic,
    "quartic": quartic,
    "quintic": quintic,
    "bidegree_d2": bidegree_d2,
    "bidegree_d2_top": bidegree_d2_top,
    "bidegree_2d_real": bidegree_2d_real,
    "gw_2d": gw_2d,
}


def closed_forms(name: str, *params: int) -> int:
    try:
        fn = CLOSED_FORMS[name]
    except KeyError:
        raise OutOfRange(f"unknown closed form {name!r}; known: {sorted(CLOSED_FORMS)}") from None
    return fn(*params)


def forward_difference(values: Sequence[int], order: int = 1) -> list[int]:
    v = list(values)
    for _ in range(order):
        v = [v[i + 1] - v[i] for i in range(len(v) - 1)]
    return v


def _difference_row(order: int, m: int, size: int) -> list[int]:
    row = [0] * size
    for j in range(order + 1):
        row[m + j] += (-1) ** (order - j) * comb(order, j)
    return row


@dataclass
class DifferenceSystem:
    """Unknown table f(0..size-1) constrained by ``c·Δ^k f(m) = rhs``."""

    size: int
    constraints: list[tuple[int, int, int, int]] = field(default_factory=list)

    def add(self, order: int, m: int, rhs: int, coef: int = 1) -> "DifferenceSystem":
        if m < 0 or m + order >= self.size:
            raise OutOfRange(f"Δ^{order} at m={m} needs f up to {m + order}, table has {self.size}")
        self.constraints.append((order, m, coef, rhs))
        return self

    def relation(self, order: int, coef: int, rhs: Sequence[int] | Mapping[int, int]) -> "DifferenceSystem":
        """``coef·Δ^order f(m) = rhs[m]`` for every m with an entry."""
        items = rhs.items() if isinstance(rhs, Mapping) else enumerate(rhs)
        for m, v in items:
            self.add(order, m, v, coef)
        return self

    def initial(self, order: int, value: int, coef: int = 1) -> "DifferenceSystem":
        return self.add(order, 0, value, coef)


def solve_difference_system(system: DifferenceSystem) -> list[int]:
    """Exact solution by Gauss-Jordan elimination over the rationals."""
    n = system.size
    rows = []
    for order, m, coef, rhs in system.constraints:
        r = [Fraction(coef * x) for x in _difference_row(order, m, n)]
        rows.append(r + [Fraction(rhs)])
    piv_row = 0
    pivots = []
    for col in range(n):
        sel = next((i for i in range(piv_row, len(rows)) if rows[i][col] != 0), None)
        if sel is None:
            continue
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        p = rows[piv_row][col]
        rows[piv_row] = [x / p for x in rows[piv_row]]
        for i in range(len(rows)):
            if i != piv_row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
    for r in rows[piv_row:]:
        if r[-1] != 0:
            raise Inconsistent("constraints disagree")
    if len(pivots) < n:
        raise Inconsistent(f"under-determined: {n - len(pivots)} free values")
    out = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        out[col] = rows[i][-1]
    return [_as_int(x) for x in out]


def quartic_system(cubic_table: Sequence[int] | None = None, q23: int = 48, w0: int = 240) -> DifferenceSystem:
    """Δ²W4 = 4·W3, -ΔW4(0) = 2·W_Q(2,3), W4(0) = 240."""
    w3 = list(cubic_table) if cubic_table is not None else [cubic(m) for m in range(5)]
    s = DifferenceSystem(6)
    s.relation(2, 1, [4 * w3[m] for m in range(4)])
    s.initial(1, 2 * q23, coef=-1)
    s.initial(0, w0)
    return s


def quintic_system(quartic_table: Sequence[int], q33: int = 1086, p1_52: int = 4584,
                   w0: int = 18264) -> DifferenceSystem:
    """-Δ³W5 = 8·W4, Δ²W5(0) = 4·W_Q(3,3), -ΔW5(0) = 2·W_P1(5;2), W5(0) = 18264."""
    s = DifferenceSystem(8)
    s.relation(3, -1, [8 * quartic_table[m] for m in range(5)])
    s.initial(2, 4 * q33)
    s.initial(1, 2 * p1_52, coef=-1)
    s.initial(0, w0)
    return s


@dataclass(frozen=True)
class Relation:
    """``Δ^order A(m) = factor·B(m)`` for m in ``ms`` (default: every m where both sides exist)."""

    order: int
    factor: int
    ms: tuple[int, ...] | None = None


def wallcross_check(table_a: Sequence[int], table_b: Sequence[int], relation: Relation) -> bool:
    diff = forward_difference(table_a, relation.order)
    ms = relation.ms if relation.ms is not None else range(min(len(diff), len(table_b)))
    for m in ms:
        if m >= len(diff) or m >= len(table_b):
            return False
        if diff[m] != relation.factor * table_b[m]:
            return False
    return True


def load_tables() -> dict:
    """Golden tables shipped with the package."""
    text = resources.files("tropicount").joinpath("data/tables.json").read_text()
    return json.loads(text)
