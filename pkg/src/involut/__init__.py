"""Exact computations with involutions of generic matrix algebras.

The extended group PGL_n x| <tau>, with tau(h) = (h^-1)^t, acts on m-tuples of
n x n matrices by simultaneous conjugation and (signed) transposition.  The
stabilizer of a general point decides whether the induced involution is
unitary, orthogonal or symplectic.
"""

__version__ = "0.1.0"

from .scalars import TowerContext, TowerScalar, adjoin_sqrt
from .matrices import (
    Family,
    J_matrix,
    Matrix,
    MatrixTuple,
    ProjectiveMatrix,
    Symmetry,
    classify_projective_symmetry,
    conjugate_tuple,
    g0,
    proj_eq,
    proj_transpose,
    sample_tuple,
    tau_act,
)
from .ncpoly import NcPoly, evaluate, parse_poly, rho, sigma_tilde, trace_eval, trace_identity_test
from .stabilizer import (
    Canonical,
    Outcome,
    centralizer_is_scalar,
    generates_full_algebra,
    intertwiner_basis,
    normalizer_membership,
    stabilizer_element,
)
from .normal_form import canonicalize_tau_g, skew_congruence_to_J, sym_congruence_to_identity
from .classifier import (
    FamilySpec,
    Verdict,
    classify_involution,
    orbit_dichotomy_check,
    ud22_section6_walkthrough,
    ud22_walkthrough,
)
