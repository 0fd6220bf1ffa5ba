from fractions import Fraction

import pytest

from tropicount.lattice import (
    LAMBDA0, DivisorSpec, InvalidDivisor, LatticePolygon, LatticeSegment, double_area,
    integer_length, interior_points_count, polygon_for, rectangle, slope,
)


def test_plane_triangle():
    P = polygon_for(DivisorSpec.plane(3))
    assert set(P.vertices) == {(0, 0), (3, 0), (0, 3)}
    assert P.r == 8 and P.delta == 1
    assert P.interior_points == ((1, 1),)


def test_quadric_parallelogram():
    P = polygon_for(DivisorSpec.quadric(2, 3))
    assert set(P.vertices) == {(3, 0), (5, 0), (2, 3), (0, 3)}
    assert P.r == 9


def test_trapeze():
    P = polygon_for(DivisorSpec.blown(1, 5, 2))
    assert set(P.vertices) == {(0, 0), (5, 0), (2, 3), (0, 3)}
    assert P.r == 12


@pytest.mark.parametrize("spec", [
    DivisorSpec.plane(1), DivisorSpec.plane(4), DivisorSpec.quadric(1, 1), DivisorSpec.quadric(3, 2),
    DivisorSpec.blown(1, 3, 1), DivisorSpec.blown(2, 4, 1, 2), DivisorSpec.blown(3, 3, 1, 1, 1),
    DivisorSpec.blown(3, 5, 2, 1, 2),
])
def test_r_equals_c1_dot_d_minus_one(spec):
    assert polygon_for(spec).r == spec.c1_dot_d - 1


@pytest.mark.parametrize("bad", [
    lambda: DivisorSpec.plane(0),
    lambda: DivisorSpec.quadric(1, -2),
    lambda: DivisorSpec.blown(4, 5, 1, 1, 1, 1),
    lambda: polygon_for(DivisorSpec.blown(1, 2, 3)),
    lambda: polygon_for(DivisorSpec.blown(2, 3, 2, 2)),
    lambda: LatticePolygon([(0, 0), (1, 1), (2, 2)]),
])
def test_invalid_divisors(bad):
    with pytest.raises(InvalidDivisor):
        bad()


def test_integer_length_and_slope():
    assert integer_length((0, 0), (4, 6)) == 2
    assert integer_length((1, 1), (1, 5)) == 4
    assert slope((0, 0), (4, 6)) == Fraction(3, 2)
    assert slope((2, 0), (2, 3)) is None
    seg = LatticeSegment((0, 0), (0, 2))
    assert seg.vertical and seg.length == 2
    with pytest.raises(ValueError):
        LatticeSegment((1, 1), (1, 1))


def test_areas():
    assert double_area([(0, 0), (1, 0), (0, 1)]) == 1
    assert double_area([(0, 0), (2, 0), (0, 2)]) == 4
    assert interior_points_count([(0, 0), (3, 0), (0, 3)]) == 1
    assert rectangle(2, 3).double_area == 12


def test_order_key_matches_small_epsilon():
    pts = rectangle(4, 3).lattice_points
    eps = Fraction(1, 2 * 10)  # below 1/(2 diameter)
    by_key = sorted(pts, key=LAMBDA0.key)
    by_val = sorted(pts, key=lambda p: LAMBDA0.value(p, eps))
    assert by_key == by_val
    assert len({LAMBDA0.key(p) for p in pts}) == len(pts)


def test_extremal_vertices():
    P = polygon_for(DivisorSpec.plane(3))
    assert P.extremal_vertices() == ((0, 3), (3, 0))
