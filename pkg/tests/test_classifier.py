import numpy as np
import pytest

from involut import FamilySpec, Verdict, classify_involution, orbit_dichotomy_check, ud22_walkthrough
from involut.classifier import (
    SecondKindError,
    Trial,
    decide,
    random_walkthrough_parameters,
    sample_point,
)
from involut.matrices import Symmetry
from involut.stabilizer import Canonical, Outcome, StabilizerResult


def _trial(outcome, symmetry=None, generating=True):
    res = None if outcome is None else StabilizerResult(outcome, None, symmetry, 1)
    return Trial(0, 1, generating, res)


def test_decide_rules():
    uni = _trial(Outcome.UNIQUE, Symmetry.SYMMETRIC)
    skew = _trial(Outcome.UNIQUE, Symmetry.SKEW)
    none = _trial(Outcome.NONE_EXISTS)
    assert decide([uni, uni]) is Verdict.FIRST_KIND_ORTHOGONAL
    assert decide([skew]) is Verdict.FIRST_KIND_SYMPLECTIC
    assert decide([none, none]) is Verdict.SECOND_KIND_UNITARY
    assert decide([uni, skew]) is Verdict.INCONCLUSIVE
    assert decide([uni, none]) is Verdict.INCONCLUSIVE
    assert decide([_trial(Outcome.AMBIGUOUS)]) is Verdict.INCONCLUSIVE
    assert decide([uni, _trial(None, generating=False)]) is Verdict.NOT_GENERATING


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(2, 1)
    with pytest.raises(ValueError):
        FamilySpec(3, 2, "symp")
    with pytest.raises(ValueError):
        FamilySpec(2, 2, "sym", (1, -1))
    with pytest.raises(ValueError):
        FamilySpec(2, 2, "full", (1, 1, 1))
    assert FamilySpec(2, 3).signs == (1, 1, 1)


def test_m2_n2_is_orthogonal():
    rep = classify_involution(FamilySpec(2, 2), seed=7)
    assert rep.verdict is Verdict.FIRST_KIND_ORTHOGONAL
    assert rep.canonical_stabilizer == "{1,tau}"
    assert all(t.canonical is Canonical.TAU for t in rep.trials)


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2)])
def test_larger_full_families_are_unitary(n, m):
    rep = classify_involution(FamilySpec(n, m), trials=3, seed=1)
    assert rep.verdict is Verdict.SECOND_KIND_UNITARY
    assert rep.canonical_stabilizer == "{1}"


def test_mixed_signs_break_the_transpose():
    rep = classify_involution(FamilySpec(2, 2, "full", (1, -1)), trials=3, seed=2)
    assert rep.verdict is Verdict.SECOND_KIND_UNITARY


def test_symmetric_family_is_orthogonal():
    rep = classify_involution(FamilySpec(3, 2, "sym"), trials=3, seed=4)
    assert rep.verdict is Verdict.FIRST_KIND_ORTHOGONAL


@pytest.mark.parametrize("n,m", [(4, 4), (6, 3)])
def test_symplectic_family_once_it_generates(n, m):
    rep = classify_involution(FamilySpec(n, m, "symp"), trials=2, seed=0)
    assert rep.verdict is Verdict.FIRST_KIND_SYMPLECTIC
    assert all(t.canonical is Canonical.TAU_G0 for t in rep.trials)
    assert rep.canonical_stabilizer == "{1,tau*g0}"


def test_symplectic_n2_never_generates():
    rep = classify_involution(FamilySpec(2, 3, "symp"), trials=2, seed=0, retry_cap=3)
    assert rep.verdict is Verdict.NOT_GENERATING
    assert rep.trials[0].attempts == 3


def test_structured_points_are_conjugated():
    point, conj_seed = sample_point(FamilySpec(3, 2, "sym"), seed=9)
    assert conj_seed is not None
    assert not all(c.is_symmetric() for c in point)
    point, conj_seed = sample_point(FamilySpec(3, 2), seed=9)
    assert conj_seed is None


def test_report_is_seed_deterministic():
    a = classify_involution(FamilySpec(2, 2), trials=3, seed=5).to_json()
    b = classify_involution(FamilySpec(2, 2), trials=3, seed=5).to_json()
    c = classify_involution(FamilySpec(2, 2), trials=3, seed=6).to_json()
    assert a == b
    assert a["trials"] != c["trials"]
    assert a["schema"] == "involut/1"


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        classify_involution(FamilySpec(2, 2), trials=0)


def test_orbit_dichotomy():
    assert orbit_dichotomy_check(FamilySpec(3, 2, "sym"), seed=0)
    assert orbit_dichotomy_check(FamilySpec(2, 2), seed=0)
    with pytest.raises(SecondKindError):
        orbit_dichotomy_check(FamilySpec(3, 2), seed=0)


def test_walkthrough_examples():
    res = ud22_walkthrough(1, 2, 0, 1, 2, 0)
    assert res.ok and res.generating
    assert res.g.representative.is_symmetric()
    res = ud22_walkthrough(3, -1, 5, 7, -2, 4)
    assert res.ok
    with pytest.raises(ValueError):
        ud22_walkthrough(1, 1, 0, 1, 2, 0)
    with pytest.raises(ValueError):
        ud22_walkthrough(1, 2, 0, 0, 2, 0)


def test_walkthrough_random():
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert ud22_walkthrough(*random_walkthrough_parameters(rng)).ok
