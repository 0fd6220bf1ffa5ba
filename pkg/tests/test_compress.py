import pytest

from tropicount.compress import (
    ArithmeticInconsistency, build_seeds, cell_from_vertex_set, compress_all, consistent_subdivisions,
    dual_components, is_consistent, make_cell, replay, triangle_factor,
)
from tropicount.invariants import subdivisions
from tropicount.lattice import DivisorSpec, integer_length, polygon_for
from tropicount.paths import IndexSet, enumerate_paths


def test_triangle_factor_values():
    # frozen: unit triangle, doubled triangle, forbidden notch, odd-odd-odd
    assert triangle_factor((0, 0), (1, 0), (0, 1)) == 1
    assert triangle_factor((0, 0), (2, 0), (0, 2)) == -2
    assert triangle_factor((0, 0), (1, 0), (0, 2)) is None
    assert triangle_factor((0, 0), (3, 0), (0, 1)) == 1


def test_cells():
    assert len(make_cell([(0, 0), (1, 0), (0, 1)])) == 3
    par = cell_from_vertex_set([(1, 1), (0, 0), (1, 0), (0, 1)])
    assert len(par) == 4
    with pytest.raises(ArithmeticInconsistency):
        make_cell([(0, 0), (1, 1), (2, 2)])


def test_unit_triangle_subdivision():
    (s,) = subdivisions(DivisorSpec.plane(1), 0)
    assert s.coefficient == 1
    assert s.cells == (((0, 0), (1, 0), (0, 1)),)


def test_every_outcome_tiles_the_polygon():
    P = polygon_for(DivisorSpec.plane(3))
    for g in enumerate_paths(P, IndexSet.default(P, 1)):
        for seed in build_seeds(P, g):
            for s in compress_all(seed):
                area = 0
                for c in s.cells:
                    xs = [p[0] for p in c]
                    ys = [p[1] for p in c]
                    area += abs(sum(xs[i] * ys[i - 1] - xs[i - 1] * ys[i] for i in range(len(c))))
                assert area == P.double_area


def test_consistent_outcomes_pass_the_checks_and_replay():
    P = polygon_for(DivisorSpec.quadric(2, 2))
    n = 0
    for g in enumerate_paths(P, IndexSet.default(P, 1)):
        for s in consistent_subdivisions(P, g):
            ok, why = is_consistent(s, P)
            assert ok, why
            assert dual_components(s.cells) == 1
            assert all(integer_length(a, b) <= 2
                       for a, b in s.boundary_edges())
            assert replay(P, g, dict(s.apexes), s.cells) == s.coefficient
            n += 1
    assert n == 6


def test_replay_rejects_foreign_tiling():
    P = polygon_for(DivisorSpec.plane(3))
    subs = list(subdivisions(DivisorSpec.plane(3), 0))
    a, b = subs[0], next(s for s in subs if s.path != subs[0].path)
    assert replay(P, a.path, dict(a.apexes), b.cells) is None
