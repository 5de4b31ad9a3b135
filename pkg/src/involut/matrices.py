"""Exact square matrices, matrix tuples, and the PGL_n / transpose actions on them."""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .scalars import TowerScalar, format_rational, scalar_from_json, scalar_to_json, to_fraction


def _coerce_entry(x):
    if isinstance(x, (Fraction, TowerScalar)):
        return x
    return to_fraction(x)


class Matrix:
    """Immutable n x n matrix with exact entries (Fractions or TowerScalars)."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """Matrix unit e_{i,j}, 1-based like the usual notation."""
        return cls([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)] for r in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> List:
        return [x for row in self.rows for x in row]

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def transpose(self) -> "Matrix":
        return self.T

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_size(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_size(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_size(other)
        cols = list(zip(*other.rows))
        return Matrix(
            [[_dot(r, c) for c in cols] for r in self.rows]
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        if isinstance(other, (int, Fraction, TowerScalar)):
            return Matrix([[a * other for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, TowerScalar)):
            return Matrix([[other * a for a in r] for r in self.rows])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    def _check_size(self, other):
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries())

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_skew(self) -> bool:
        return self == -self.T

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        return all(
            (x == d) if i == j else (x == 0)
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
        )

    def is_rational(self) -> bool:
        return all(not isinstance(x, TowerScalar) or x.is_rational() for x in self.entries())

    def det(self):
        from .linalg import determinant

        return determinant(self)

    def inverse(self) -> "Matrix":
        from .linalg import inverse

        return inverse(self)

    def first_nonzero(self):
        for x in self.entries():
            if x != 0:
                return x
        return None

    def to_json(self):
        return [[scalar_to_json(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, rows) -> "Matrix":
        return cls([[scalar_from_json(x) for x in r] for r in rows])


def _dot(r, c):
    acc = Fraction(0)
    for a, b in zip(r, c):
        if a and b:
            acc = acc + a * b
    return acc


def J_matrix(n: int) -> Matrix:
    """The block matrix [[0, I], [-I, 0]] with I of order n/2."""
    if n % 2:
        raise ValueError("J is only defined for even n")
    h = n // 2
    rows = [[0] * n for _ in range(n)]
    for i in range(h):
        rows[i][h + i] = 1
        rows[h + i][i] = -1
    return Matrix(rows)


class Symmetry(str, enum.Enum):
    SYMMETRIC = "Symmetric"
    SKEW = "Skew"
    NOT_SELF_TRANSPOSED = "NotSelfTransposed"


class ProjectiveMatrix:
    """An element of PGL_n: an invertible matrix modulo nonzero scalars.

    The stored representative is normalized so its first nonzero entry
    (row-major) equals 1, making equality a plain comparison.
    """

    __slots__ = ("representative",)

    def __init__(self, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.det() == 0:
            raise ValueError("a projective matrix needs an invertible representative")
        lead = matrix.first_nonzero()
        self.representative = matrix if lead == 1 else matrix * (1 / lead)

    @property
    def n(self) -> int:
        return self.representative.n

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return proj_eq(self, other)

    def __hash__(self):
        return hash(self.representative)

    def __mul__(self, other):
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return ProjectiveMatrix(self.representative @ other.representative)

    def inverse(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix(self.representative.inverse())

    @property
    def T(self) -> "ProjectiveMatrix":
        return proj_transpose(self)

    def __repr__(self):
        return f"ProjectiveMatrix({self.representative!r})"

    def to_json(self):
        return self.representative.to_json()


def proj_eq(g: ProjectiveMatrix, h: ProjectiveMatrix) -> bool:
    if g.n != h.n:
        raise ValueError("projective matrices of different sizes")
    return g.representative == h.representative


def proj_transpose(g: ProjectiveMatrix) -> ProjectiveMatrix:
    return ProjectiveMatrix(g.representative.T)


def g0(n: int) -> ProjectiveMatrix:
    return ProjectiveMatrix(J_matrix(n))


def classify_projective_symmetry(g: ProjectiveMatrix) -> Symmetry:
    rep = g.representative
    t = rep.T
    if t == rep:
        return Symmetry.SYMMETRIC
    if t == -rep:
        return Symmetry.SKEW
    return Symmetry.NOT_SELF_TRANSPOSED


class MatrixTuple:
    """A point (a_1, ..., a_m) of (M_n)^m."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence):
        comps = tuple(c if isinstance(c, Matrix) else Matrix(c) for c in components)
        if not comps:
            raise ValueError("a matrix tuple needs at least one component")
        if len({c.n for c in comps}) != 1:
            raise ValueError("all components must have the same size")
        self.components = comps

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def m(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i) -> Matrix:
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        if not isinstance(other, MatrixTuple):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"MatrixTuple({list(self.components)!r})"

    @property
    def T(self) -> "MatrixTuple":
        return MatrixTuple([c.T for c in self.components])

    def to_json(self, signs: Optional[Sequence[int]] = None) -> dict:
        data = {"n": self.n, "m": self.m, "components": [c.to_json() for c in self.components]}
        if signs is not None:
            data["signs"] = list(signs)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "MatrixTuple":
        comps = [Matrix.from_json(c) for c in data["components"]]
        tup = cls(comps)
        if "n" in data and data["n"] != tup.n:
            raise ValueError(f"declared n={data['n']} but components have size {tup.n}")
        if "m" in data and data["m"] != tup.m:
            raise ValueError(f"declared m={data['m']} but found {tup.m} components")
        return tup


def check_signs(signs: Sequence[int], m: int) -> Tuple[int, ...]:
    signs = tuple(int(s) for s in signs)
    if len(signs) != m:
        raise ValueError(f"expected {m} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    return signs


def conjugate_tuple(h, a: MatrixTuple) -> MatrixTuple:
    """(h a_1 h^-1, ..., h a_m h^-1)."""
    rep = h.representative if isinstance(h, ProjectiveMatrix) else h
    if rep.n != a.n:
        raise ValueError("size mismatch between group element and tuple")
    inv = rep.inverse()
    return MatrixTuple([rep @ c @ inv for c in a])


def tau_act(signs: Sequence[int], a: MatrixTuple) -> MatrixTuple:
    """Signed transpose (eps_1 a_1^t, ..., eps_m a_m^t)."""
    signs = check_signs(signs, a.m)
    return MatrixTuple([c.T if s == 1 else -c.T for s, c in zip(signs, a)])


class Family(str, enum.Enum):
    FULL = "full"
    SYMMETRIC = "sym"
    SYMPLECTIC = "symp"


DEFAULT_BOUND = 10


def derive_seeds(seed, count: int, *key: int) -> List[int]:
    """``count`` independent integer seeds derived from a master seed (and optional key)."""
    entropy = seed if not key else [seed if seed is not None else 0, *key]
    return [int(s) for s in np.random.SeedSequence(entropy).generate_state(count)]


def _random_int_matrix(rng: np.random.Generator, n: int, bound: int) -> List[List[int]]:
    return rng.integers(-bound, bound + 1, size=(n, n)).tolist()


def sample_tuple(n: int, m: int, family=Family.FULL, bound: int = DEFAULT_BOUND,
                 seed=None) -> MatrixTuple:
    """Random integer tuple from one of the three families; deterministic in ``seed``.

    ``sym`` components are symmetric.  ``symp`` components are ``J @ w`` with
    ``w`` skew, so that ``g0`` conjugates each of them to its transpose.
    """
    family = Family(family)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if family is Family.SYMPLECTIC and n % 2:
        raise ValueError("the symplectic family needs even n")
    rng = np.random.default_rng(seed)
    comps = []
    for _ in range(m):
        raw = _random_int_matrix(rng, n, bound)
        if family is Family.FULL:
            comps.append(Matrix(raw))
        elif family is Family.SYMMETRIC:
            comps.append(Matrix([[raw[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]))
        else:
            w = Matrix([[raw[i][j] if i < j else (-raw[j][i] if i > j else 0)
                         for j in range(n)] for i in range(n)])
            comps.append(J_matrix(n) @ w)
    return MatrixTuple(comps)


def sample_projective(n: int, bound: int = DEFAULT_BOUND, seed=None) -> ProjectiveMatrix:
    """Random invertible integer matrix, resampled until nonsingular."""
    rng = np.random.default_rng(seed)
    while True:
        m = Matrix(_random_int_matrix(rng, n, bound))
        if m.det() != 0:
            return ProjectiveMatrix(m)


def sample_orthogonal(n: int, bound: int = 3, seed=None) -> ProjectiveMatrix:
    """Random rational orthogonal matrix: a signed permutation times a Cayley transform."""
    rng = np.random.default_rng(seed)
    raw = _random_int_matrix(rng, n, bound)
    a = Matrix([[raw[i][j] if i < j else (-raw[j][i] if i > j else 0)
                 for j in range(n)] for i in range(n)])
    eye = Matrix.identity(n)
    # I + A is invertible for skew A over Q (eigenvalues of A are imaginary)
    cayley = (eye - a) @ (eye + a).inverse()
    perm = rng.permutation(n)
    signs = rng.choice([-1, 1], size=n)
    p = Matrix([[int(signs[i]) if perm[i] == j else 0 for j in range(n)] for i in range(n)])
    return ProjectiveMatrix(p @ cayley)


__all__ = [
    "Matrix",
    "MatrixTuple",
    "ProjectiveMatrix",
    "Symmetry",
    "Family",
    "J_matrix",
    "g0",
    "proj_eq",
    "proj_transpose",
    "classify_projective_symmetry",
    "conjugate_tuple",
    "tau_act",
    "check_signs",
    "sample_tuple",
    "sample_projective",
    "sample_orthogonal",
    "derive_seeds",
    "format_rational",
]
