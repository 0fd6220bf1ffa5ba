import pytest

from tropicount.chains import chain_analysis, lemma_violations, sign_by_formula
from tropicount.invariants import subdivisions
from tropicount.lattice import DivisorSpec


@pytest.mark.parametrize("spec,m", [
    (DivisorSpec.plane(3), 0), (DivisorSpec.plane(3), 2), (DivisorSpec.plane(4), 1),
    (DivisorSpec.quadric(2, 2), 2), (DivisorSpec.quadric(3, 2), 3), (DivisorSpec.blown(1, 3, 1), 1),
])
def test_lemmas_hold(spec, m):
    subs = list(subdivisions(spec, m))
    assert subs
    v = lemma_violations(subs)
    assert not any(v.values()), {k: x[:2] for k, x in v.items() if x}


def test_sign_formula_matches_coefficient_sign():
    for s in subdivisions(DivisorSpec.plane(4), 2):
        sgn = 1 if s.coefficient > 0 else -1
        assert sign_by_formula(s) == sgn


def test_chain_analysis_runs():
    s = next(iter(subdivisions(DivisorSpec.plane(3), 0)))
    assert chain_analysis(s) is not None
