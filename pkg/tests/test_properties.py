"""Randomised properties: I-independence, structural lemmas, exact helpers."""
import math
from fractions import Fraction
from itertools import combinations

from hypothesis import given, settings, strategies as st

from tropicount.bounds import SquareSequence, log_strip_count, strip_count, strip_sides
from tropicount.chains import lemma_violations
from tropicount.invariants import subdivisions, welschinger
from tropicount.lattice import LAMBDA0, DivisorSpec, polygon_for
from tropicount.oracles import DifferenceSystem, forward_difference, solve_difference_system

SMALL = [DivisorSpec.plane(3), DivisorSpec.quadric(2, 2), DivisorSpec.quadric(2, 1),
         DivisorSpec.blown(1, 3, 1), DivisorSpec.blown(2, 3, 1, 1)]


@st.composite
def target_and_index_set(draw):
    spec = draw(st.sampled_from(SMALL))
    P = polygon_for(spec)
    m = draw(st.integers(0, P.r // 2))
    subsets = list(combinations(range(1, P.r - m + 1), m))
    return spec, m, draw(st.sampled_from(subsets))


@settings(max_examples=40, deadline=None)
@given(target_and_index_set())
def test_value_does_not_depend_on_index_set(case):
    spec, m, I = case
    assert welschinger(spec, m, I).value == welschinger(spec, m).value


@settings(max_examples=25, deadline=None)
@given(target_and_index_set())
def test_lemmas_on_random_index_sets(case):
    spec, m, I = case
    v = lemma_violations(subdivisions(spec, m, I))
    assert not any(v.values())


@given(st.integers(1, 10 ** 7))
def test_square_sequence_inequality(n):
    assert SquareSequence.build(n).check()


@given(st.integers(0, 40), st.integers(0, 40))
def test_strip_count_symmetric(a, b):
    c = strip_count(a, b)
    assert c == strip_count(b, a) >= 1
    assert abs(log_strip_count(a, b) - math.log(c)) < 1e-9


@given(st.integers(1, 6), st.integers(1, 6), st.integers(-1, 2))
def test_strip_sides_of_a_trapezoid(w, h0, s):
    top = [h0 + s * c for c in range(w + 1)]
    if min(top) < 1:
        return
    region = [(0, 0), (w, 0), (w, top[-1]), (0, h0)]
    assert strip_sides(region, "v") == [(c, top[c], top[c + 1]) for c in range(w)]


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=8), st.integers(1, 3))
def test_difference_system_recovers_table(table, k):
    k = min(k, len(table) - 1)
    s = DifferenceSystem(len(table)).relation(k, 1, forward_difference(table, k))
    for j in range(k):
        s.initial(j, forward_difference(table, j)[0])
    assert solve_difference_system(s) == table


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_order_key_is_lambda_for_small_eps(x1, y1, x2, y2):
    eps = Fraction(1, 100)
    a, b = (x1, y1), (x2, y2)
    if a == b:
        return
    assert (LAMBDA0.key(a) < LAMBDA0.key(b)) == (LAMBDA0.value(a, eps) < LAMBDA0.value(b, eps))
