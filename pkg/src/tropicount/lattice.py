"""Exact lattice geometry and the divisor polygons of the toric Del Pezzo surfaces.

Points are plain ``(x, y)`` integer tuples throughout the package; nothing in
here ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

Point = tuple[int, int]


class InvalidDivisor(ValueError):
    """The vertex list of a divisor polygon is degenerate or not convex."""


class DegenerateCell(ValueError):
    pass


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def cross(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def turn(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of abc; positive for a left (counterclockwise) turn."""
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])


def integer_length(a: Point, b: Point) -> int:
    if a == b:
        raise DegenerateCell(f"zero-length segment at {a}")
    return gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


@dataclass(frozen=True)
class LatticeSegment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateCell("segment endpoints coincide")

    @property
    def length(self) -> int:
        return integer_length(self.a, self.b)

    @property
    def vertical(self) -> bool:
        return self.a[0] == self.b[0]

    @property
    def slope(self) -> Fraction | None:
        """Exact slope, or ``None`` for a vertical segment."""
        dx = self.b[0] - self.a[0]
        if dx == 0:
            return None
        return Fraction(self.b[1] - self.a[1], dx)

    def lattice_points(self) -> list[Point]:
        n = self.length
        dx = (self.b[0] - self.a[0]) // n
        dy = (self.b[1] - self.a[1]) // n
        return [(self.a[0] + k * dx, self.a[1] + k * dy) for k in range(n + 1)]


def slope(a: Point, b: Point) -> Fraction | None:
    return LatticeSegment(a, b).slope


def double_area(cell: Sequence[Point]) -> int:
    """Integer (doubled Euclidean) area of a lattice triangle or parallelogram.

    For a parallelogram this is the determinant of its two spanning vectors,
    which is also the ordinary doubled area of any lattice polygon given in
    cyclic order, so the shoelace formula covers both cases.
    """
    if len(cell) < 3:
        raise DegenerateCell(f"cell needs at least 3 vertices, got {cell!r}")
    s = 0
    for i, p in enumerate(cell):
        q = cell[(i + 1) % len(cell)]
        s += p[0] * q[1] - p[1] * q[0]
    if s == 0:
        raise DegenerateCell(f"zero-area cell {cell!r}")
    return abs(s)


def interior_points_count(cell: Sequence[Point]) -> int:
    """Number of lattice points strictly inside a lattice polygon (Pick)."""
    b = sum(integer_length(cell[i], cell[(i + 1) % len(cell)]) for i in range(len(cell)))
    twice_a = double_area(cell)
    return (twice_a - b + 2) // 2


class Lambda0:
    """The order ``λ(i, j) = i - ε j`` for infinitesimal ``ε > 0``.

    Realised as the lexicographic key (x ascending, y descending).  Other
    injective linear orders could be plugged in through the same interface,
    but only this one is shipped.
    """

    name = "lambda0"

    @staticmethod
    def key(p: Point) -> tuple[int, int]:
        return (p[0], -p[1])

    @staticmethod
    def value(p: Point, eps: Fraction) -> Fraction:
        return p[0] - eps * p[1]

    def __repr__(self):
        return "Lambda0()"


LAMBDA0 = Lambda0()


def _ccw(vertices: Sequence[Point]) -> list[Point]:
    s = 0
    for i, p in enumerate(vertices):
        q = vertices[(i + 1) % len(vertices)]
        s += p[0] * q[1] - p[1] * q[0]
    return list(vertices) if s > 0 else list(reversed(vertices))


class LatticePolygon:
    """A convex lattice polygon with vertices stored counterclockwise."""

    def __init__(self, vertices: Iterable[Point], name: str = ""):
        vs = [tuple(map(int, v)) for v in vertices]
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise InvalidDivisor(f"need at least 3 distinct vertices: {vs}")
        vs = _ccw(vs)
        n = len(vs)
        for i in range(n):
            t = turn(vs[i - 1], vs[i], vs[(i + 1) % n])
            if t <= 0:
                raise InvalidDivisor(f"polygon {vs} is not strictly convex at {vs[i]}")
        self.vertices: tuple[Point, ...] = tuple(vs)
        self.name = name

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, p: Point) -> bool:
        for a, b in self.edges:
            if turn(a, b, p) < 0:
                return False
        return True

    def on_boundary(self, p: Point) -> bool:
        if not self.contains(p):
            return False
        return any(turn(a, b, p) == 0 for a, b in self.edges)

    def segment_on_boundary(self, a: Point, b: Point) -> bool:
        return any(turn(u, v, a) == 0 and turn(u, v, b) == 0 for u, v in self.edges)

    @cached_property
    def lattice_points(self) -> tuple[Point, ...]:
        """All lattice points, sorted by the λ⁰ key."""
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        pts = [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        ]
        pts.sort(key=LAMBDA0.key)
        return tuple(pts)

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.lattice_points)

    @cached_property
    def boundary_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.lattice_points if self.on_boundary(p))

    @cached_property
    def interior_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.lattice_points if not self.on_boundary(p))

    @property
    def r(self) -> int:
        """Number of boundary lattice points minus one."""
        return len(self.boundary_points) - 1

    @property
    def delta(self) -> int:
        return len(self.interior_points)

    @cached_property
    def double_area(self) -> int:
        return double_area(self.vertices)

    @property
    def s_min(self) -> Fraction:
        """Minimal slope among the non-vertical sides."""
        return min(slope(a, b) for a, b in self.edges if a[0] != b[0])

    def extremal_vertices(self, order=LAMBDA0) -> tuple[Point, Point]:
        p = min(self.vertices, key=order.key)
        q = max(self.vertices, key=order.key)
        return p, q

    @cached_property
    def chains(self) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
        """(upper, lower) boundary chains from p to q.

        The lower chain follows the counterclockwise order from ``p``; the
        upper chain goes clockwise.  Walking either chain from ``p`` to ``q``
        the polygon lies on the right of the upper chain and on the left of
        the lower one.
        """
        p, q = self.extremal_vertices()
        vs = list(self.vertices)
        n = len(vs)
        i = vs.index(p)
        lower = [p]
        k = i
        while vs[k] != q:
            k = (k + 1) % n
            lower.append(vs[k])
        upper = [p]
        k = i
        while vs[k] != q:
            k = (k - 1) % n
            upper.append(vs[k])
        return tuple(upper), tuple(lower)

    def translated(self, dx: int, dy: int) -> "LatticePolygon":
        return LatticePolygon([(x + dx, y + dy) for x, y in self.vertices], self.name)


PLANE, QUADRIC, BLOWN = "plane", "quadric", "blown"


@dataclass(frozen=True)
class DivisorSpec:
    """A toric Del Pezzo surface together with an ample divisor.

    ``degrees`` is ``(d,)`` for the plane, ``(d1, d2)`` for the quadric and
    ``(d, d1, ..., dk)`` for the plane blown up at ``k`` toric points.
    """

    surface: str
    degrees: tuple[int, ...]
    k: int = 0
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def plane(cls, d: int) -> "DivisorSpec":
        return cls(PLANE, (d,))

    @classmethod
    def quadric(cls, d1: int, d2: int) -> "DivisorSpec":
        return cls(QUADRIC, (d1, d2))

    @classmethod
    def blown(cls, k: int, d: int, *ds: int) -> "DivisorSpec":
        if k not in (1, 2, 3) or len(ds) != k:
            raise InvalidDivisor(f"blown-up plane needs k in 1..3 and k multiplicities, got k={k}, {ds}")
        return cls(BLOWN, (d, *ds), k)

    def __post_init__(self):
        if any(int(x) != x or x <= 0 for x in self.degrees):
            raise InvalidDivisor(f"degree parameters must be positive integers: {self.degrees}")
        expected = {PLANE: 1, QUADRIC: 2}.get(self.surface)
        if self.surface == BLOWN:
            expected = self.k + 1
        if expected is None or len(self.degrees) != expected:
            raise InvalidDivisor(f"bad degree tuple {self.degrees} for {self.surface}")

    @property
    def c1_dot_d(self) -> int:
        if self.surface == PLANE:
            return 3 * self.degrees[0]
        if self.surface == QUADRIC:
            return 2 * sum(self.degrees)
        d, *ds = self.degrees
        return 3 * d - sum(ds)

    def scaled(self, n: int) -> "DivisorSpec":
        return DivisorSpec(self.surface, tuple(n * x for x in self.degrees), self.k)

    @property
    def label(self) -> str:
        if self.surface == PLANE:
            return f"P2(d={self.degrees[0]})"
        if self.surface == QUADRIC:
            return f"Q{self.degrees}"
        return f"P{self.k}(d={self.degrees[0]}; {', '.join(map(str, self.degrees[1:]))})"


def polygon_for(spec: DivisorSpec) -> LatticePolygon:
    """The polygon whose lattice points index the monomials of ``|D|``."""
    if spec.surface == PLANE:
        (d,) = spec.degrees
        vs = [(0, 0), (d, 0), (0, d)]
    elif spec.surface == QUADRIC:
        d1, d2 = spec.degrees
        vs = [(d2, 0), (d1 + d2, 0), (d1, d2), (0, d2)]
    else:
        d, *ds = spec.degrees
        if spec.k == 1:
            (d1,) = ds
            vs = [(0, 0), (d, 0), (d1, d - d1), (0, d - d1)]
        elif spec.k == 2:
            d1, d2 = ds
            vs = [(0, 0), (d - d1, 0), (d - d1, d1), (d2, d - d2), (0, d - d2)]
        else:
            d1, d2, d3 = ds
            vs = [(d3, 0), (d - d1, 0), (d - d1, d1), (d2, d - d2), (0, d - d2), (0, d3)]
    poly = LatticePolygon(vs, name=spec.label)
    if poly.r != spec.c1_dot_d - 1:
        raise InvalidDivisor(f"{spec.label}: r={poly.r} disagrees with c1.D-1={spec.c1_dot_d - 1}")
    return poly


def rectangle(width: int, height: int) -> LatticePolygon:
    """Axis-parallel rectangle; lattice-equivalent to the quadric parallelogram."""
    return LatticePolygon([(0, 0), (width, 0), (width, height), (0, height)],
                          name=f"rect({width}x{height})")


def extremal_vertices(poly: LatticePolygon, order=LAMBDA0) -> tuple[Point, Point]:
    return poly.extremal_vertices(order)
