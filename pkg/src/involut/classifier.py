"""Kind and type of the involution attached to a family of matrix tuples.

Each trial samples a point, certifies that it generates M_n, and solves for
its stabilizer element.  A verdict needs every trial to agree:

* no stabilizer element anywhere      -> second kind (unitary)
* symmetric stabilizer elements       -> first kind, orthogonal
* skew-symmetric stabilizer elements  -> first kind, symplectic
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .matrices import (
    DEFAULT_BOUND,
    Family,
    Matrix,
    MatrixTuple,
    ProjectiveMatrix,
    Symmetry,
    check_signs,
    classify_projective_symmetry,
    conjugate_tuple,
    derive_seeds,
    proj_eq,
    sample_projective,
    sample_tuple,
    tau_act,
)
from .normal_form import canonical_target, canonicalize_tau_g
from .scalars import to_fraction
from .stabilizer import (
    Canonical,
    Outcome,
    StabilizerResult,
    generates_full_algebra,
    stabilizer_element,
)

DEFAULT_TRIALS = 5
RETRY_CAP = 8


class Verdict(str, enum.Enum):
    SECOND_KIND_UNITARY = "SecondKindUnitary"
    FIRST_KIND_ORTHOGONAL = "FirstKindOrthogonal"
    FIRST_KIND_SYMPLECTIC = "FirstKindSymplectic"
    INCONCLUSIVE = "Inconclusive"
    NOT_GENERATING = "NotGenerating"


CANONICAL_STABILIZER = {
    Verdict.SECOND_KIND_UNITARY: "{1}",
    Verdict.FIRST_KIND_ORTHOGONAL: "{1,tau}",
    Verdict.FIRST_KIND_SYMPLECTIC: "{1,tau*g0}",
}


@dataclass(frozen=True)
class FamilySpec:
    n: int
    m: int
    family: Family = Family.FULL
    signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.m < 2:
            raise ValueError("families need m >= 2")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family is Family.SYMPLECTIC and self.n % 2:
            raise ValueError("the symplectic family needs even n")
        if self.signs is None:
            signs = (1,) * self.m
        else:
            signs = check_signs(self.signs, self.m)
            if self.family is not Family.FULL and any(s != 1 for s in signs):
                raise ValueError("only the full family takes non-trivial signs")
        object.__setattr__(self, "signs", signs)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "family": self.family.value, "signs": list(self.signs)}


@dataclass
class Trial:
    seed: int
    attempts: int
    generating: bool
    result: Optional[StabilizerResult] = None
    conjugator_seed: Optional[int] = None
    point: Optional[MatrixTuple] = None
    canonical: Optional[Canonical] = None

    @property
    def outcome(self) -> Optional[Outcome]:
        return None if self.result is None else self.result.outcome

    @property
    def symmetry(self) -> Optional[Symmetry]:
        return None if self.result is None else self.result.symmetry

    def to_json(self) -> dict:
        data = {
            "seed": self.seed,
            "attempts": self.attempts,
            "generating": self.generating,
        }
        if self.conjugator_seed is not None:
            data["conjugator_seed"] = self.conjugator_seed
        if self.result is not None:
            data.update(self.result.to_json())
        data["canonical"] = None if self.canonical is None else self.canonical.value
        return data


@dataclass
class ClassificationReport:
    spec: FamilySpec
    seed: Optional[int]
    verdict: Verdict
    trials: List[Trial] = field(default_factory=list)

    @property
    def canonical_stabilizer(self) -> Optional[str]:
        return CANONICAL_STABILIZER.get(self.verdict)

    def to_json(self) -> dict:
        return {
            "schema": "involut/1",
            "command": "classify",
            "spec": self.spec.to_json(),
            "seed": self.seed,
            "verdict": self.verdict.value,
            "canonical_stabilizer": self.canonical_stabilizer,
            "trials": [t.to_json() for t in self.trials],
        }


def sample_point(spec: FamilySpec, seed: int, bound: int = DEFAULT_BOUND):
    """One point of the family; structured families get a random conjugation."""
    point = sample_tuple(spec.n, spec.m, spec.family, bound=bound, seed=seed)
    conj_seed = None
    if spec.family is not Family.FULL:
        conj_seed = derive_seeds(seed, 1, 1)[0]
        h = sample_projective(spec.n, bound=3, seed=conj_seed)
        point = conjugate_tuple(h, point)
    return point, conj_seed


def _verify_canonical(g: ProjectiveMatrix) -> Canonical:
    h, canonical = canonicalize_tau_g(g)
    if not proj_eq(h.T * g * h, canonical_target(canonical, g.n)):
        raise AssertionError("congruence normal form failed its residual check")
    return canonical


def run_trial(spec: FamilySpec, trial_seed: int, retry_cap: int = RETRY_CAP,
              bound: int = DEFAULT_BOUND, canonicalize: bool = True) -> Trial:
    """Sample until the point generates M_n and the stabilizer is not ambiguous."""
    trial = None
    for attempt, seed in enumerate(derive_seeds(trial_seed, retry_cap), start=1):
        point, conj_seed = sample_point(spec, seed, bound)
        if not generates_full_algebra(point):
            trial = Trial(seed, attempt, False, conjugator_seed=conj_seed, point=point)
            continue
        result = stabilizer_element(spec.signs, point, assume_generating=True)
        trial = Trial(seed, attempt, True, result, conj_seed, point)
        if result.outcome is not Outcome.AMBIGUOUS:
            break
    if canonicalize and trial.outcome is Outcome.UNIQUE:
        trial.canonical = _verify_canonical(trial.result.element)
    return trial


def decide(trials: Sequence[Trial]) -> Verdict:
    if any(not t.generating for t in trials):
        return Verdict.NOT_GENERATING
    outcomes = {(t.outcome, t.symmetry) for t in trials}
    if len(outcomes) != 1:
        return Verdict.INCONCLUSIVE
    ((outcome, symmetry),) = outcomes
    if outcome is Outcome.NONE_EXISTS:
        return Verdict.SECOND_KIND_UNITARY
    if outcome is Outcome.UNIQUE and symmetry is Symmetry.SYMMETRIC:
        return Verdict.FIRST_KIND_ORTHOGONAL
    if outcome is Outcome.UNIQUE and symmetry is Symmetry.SKEW:
        return Verdict.FIRST_KIND_SYMPLECTIC
    return Verdict.INCONCLUSIVE


def classify_involution(spec: FamilySpec, trials: int = DEFAULT_TRIALS, seed=None,
                        retry_cap: int = RETRY_CAP, bound: int = DEFAULT_BOUND,
                        canonicalize: bool = True) -> ClassificationReport:
    """Sample ``trials`` general-position points of ``spec`` and report the involution type.

    Per-trial seeds come from ``seed`` alone, so the report does not depend on
    the order in which trials run.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    done = [run_trial(spec, s, retry_cap, bound, canonicalize)
            for s in derive_seeds(seed, trials)]
    return ClassificationReport(spec, seed, decide(done), done)


class SecondKindError(ValueError):
    """The sampled point has no stabilizer element: tau x is not in the PGL_n-orbit of x."""


def orbit_dichotomy_check(spec: FamilySpec, seed=None, retry_cap: int = RETRY_CAP) -> bool:
    """Exhibit g with tau(x) = g x for one general-position point x.

    Raises :class:`SecondKindError` when the family is of the second kind.
    """
    trial = run_trial(spec, derive_seeds(seed, 1)[0], retry_cap, canonicalize=False)
    if not trial.generating:
        raise ValueError("could not sample a point generating M_n")
    if trial.outcome is Outcome.NONE_EXISTS:
        raise SecondKindError("tau(x) is not in the PGL_n-orbit of x")
    if trial.outcome is not Outcome.UNIQUE:
        raise ValueError("stabilizer element stayed ambiguous after resampling")
    g = trial.result.element
    return tau_act(spec.signs, trial.point) == conjugate_tuple(g, trial.point)


@dataclass
class WalkthroughResult:
    g: ProjectiveMatrix
    y: MatrixTuple
    conjugates_to_transpose: bool
    symmetric: bool
    generating: bool

    @property
    def ok(self) -> bool:
        return self.conjugates_to_transpose and self.symmetric


def ud22_walkthrough(lam, mu, a, b, c, d) -> WalkthroughResult:
    """For y = (diag(lam, mu), [[a, b], [c, d]]), check that g = diag(c, b) sends y to y^t."""
    lam, mu, a, b, c, d = (to_fraction(x) for x in (lam, mu, a, b, c, d))
    if lam == mu:
        raise ValueError("need lam != mu")
    if b == 0 or c == 0:
        raise ValueError("need b and c nonzero")
    y = MatrixTuple([Matrix.diag(lam, mu), Matrix([[a, b], [c, d]])])
    g = ProjectiveMatrix(Matrix.diag(c, b))
    return WalkthroughResult(
        g=g,
        y=y,
        conjugates_to_transpose=conjugate_tuple(g, y) == y.T,
        symmetric=classify_projective_symmetry(g) is Symmetry.SYMMETRIC,
        generating=generates_full_algebra(y),
    )


ud22_section6_walkthrough = ud22_walkthrough


def random_walkthrough_parameters(rng, bound: int = 20) -> Tuple[Fraction, ...]:
    """Admissible (lam, mu, a, b, c, d): lam != mu and b, c != 0."""
    while True:
        lam, mu, a, b, c, d = (Fraction(int(rng.integers(-bound, bound + 1)),
                                        int(rng.integers(1, bound + 1))) for _ in range(6))
        if lam != mu and b and c:
            return lam, mu, a, b, c, d
