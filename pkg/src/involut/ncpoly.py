"""Noncommutative polynomials in generic matrix variables X1..Xm.

Words are tuples of 0-based variable indices; the text form uses ``X1``,
``X2``, ... (1-based).  Elements of the generic matrix ring are represented by
free-algebra polynomials and only ever compared through evaluation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from .matrices import Matrix, MatrixTuple, check_signs, derive_seeds, sample_tuple
from .scalars import format_rational, to_fraction

MAX_DEGREE = 12
MAX_TERMS = 10_000

Word = Tuple[int, ...]


class PolynomialTooLargeError(ValueError):
    pass


class NcPoly:
    """Sparse map word -> nonzero rational coefficient, in ``m`` variables."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Optional[Mapping[Word, object]] = None):
        if m < 1:
            raise ValueError("need at least one variable")
        self.m = m
        clean: Dict[Word, Fraction] = {}
        for word, c in (terms or {}).items():
            word = tuple(int(i) for i in word)
            if any(not 0 <= i < m for i in word):
                raise ValueError(f"word {word} uses a variable outside X1..X{m}")
            c = to_fraction(c)
            if c:
                clean[word] = clean.get(word, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}
        if len(self.terms) > MAX_TERMS:
            raise PolynomialTooLargeError(f"{len(self.terms)} terms exceeds cap {MAX_TERMS}")
        if self.degree() > MAX_DEGREE:
            raise PolynomialTooLargeError(f"degree {self.degree()} exceeds cap {MAX_DEGREE}")

    @classmethod
    def variable(cls, i: int, m: int) -> "NcPoly":
        """The generic matrix X_{i+1}."""
        return cls(m, {(i,): 1})

    @classmethod
    def constant(cls, c, m: int) -> "NcPoly":
        return cls(m, {(): c})

    @classmethod
    def monomial(cls, word: Sequence[int], m: int, coeff=1) -> "NcPoly":
        return cls(m, {tuple(word): coeff})

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "NcPoly"):
        if self.m != other.m:
            raise ValueError(f"variable counts differ: {self.m} vs {other.m}")

    def _lift(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly.constant(other, self.m)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcPoly(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.m, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NcPoly(self.m, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        if self.degree() + other.degree() > MAX_DEGREE and self.terms and other.terms:
            raise PolynomialTooLargeError("product degree exceeds cap")
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NcPoly(self.m, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        result = NcPoly.constant(1, self.m)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NcPoly({self.m}, {self})"

    def __str__(self):
        return format_poly(self)

    # -- involutions --------------------------------------------------------

    def rho(self) -> "NcPoly":
        return rho(self)

    def substitute_signs(self, signs: Sequence[int]) -> "NcPoly":
        """p(eps_1 X_1, ..., eps_m X_m)."""
        signs = check_signs(signs, self.m)
        out = {}
        for w, c in self.terms.items():
            s = 1
            for i in w:
                s *= signs[i]
            out[w] = c * s
        return NcPoly(self.m, out)

    def to_json(self):
        return {
            "m": self.m,
            "terms": [
                {"word": [i + 1 for i in w], "coeff": format_rational(c)}
                for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
            ],
        }

    @classmethod
    def from_json(cls, data) -> "NcPoly":
        return cls(
            data["m"],
            {tuple(i - 1 for i in t["word"]): to_fraction(t["coeff"]) for t in data["terms"]},
        )


def rho(p: NcPoly) -> NcPoly:
    """Reverse every monomial: X_{i1}...X_{ij} -> X_{ij}...X_{i1}."""
    return NcPoly(p.m, {w[::-1]: c for w, c in p.terms.items()})


def sigma_tilde(signs: Sequence[int], p: NcPoly) -> NcPoly:
    """rho(p(eps_1 X_1, ..., eps_m X_m))."""
    return rho(p.substitute_signs(signs))


def evaluate(p: NcPoly, a: MatrixTuple) -> Matrix:
    """Substitute the tuple ``a`` for the generic matrices; the empty word is I."""
    if a.m != p.m:
        raise ValueError(f"polynomial has {p.m} variables but tuple has {a.m} components")
    n = a.n
    eye = Matrix.identity(n)
    cache: Dict[Word, Matrix] = {(): eye}

    def word_value(w: Word) -> Matrix:
        if w not in cache:
            cache[w] = word_value(w[:-1]) @ a[w[-1]]
        return cache[w]

    acc = Matrix.zeros(n)
    for w, c in p.terms.items():
        acc = acc + word_value(w) * c
    return acc


def trace_eval(p: NcPoly, a: MatrixTuple):
    return evaluate(p, a).trace()


@dataclass
class TraceTestResult:
    """Outcome of randomized trace identity testing.

    ``identity`` is only evidence; a returned ``counterexample`` is certain.
    """

    identity: bool
    trials: int
    counterexample: Optional[MatrixTuple] = None
    seed: Optional[int] = None
    values: Optional[Tuple[Fraction, Fraction]] = None


TRACE_TEST_BOUND = 5


def trace_identity_test(p: NcPoly, q: NcPoly, n: int, trials: int = 20,
                        seed=None) -> TraceTestResult:
    """Compare tr p(a) and tr q(a) at random integer tuples with entries in [-5, 5]."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p._check(q)
    for k, s in enumerate(derive_seeds(seed, trials)):
        a = sample_tuple(n, p.m, "full", bound=TRACE_TEST_BOUND, seed=s)
        tp, tq = trace_eval(p, a), trace_eval(q, a)
        if tp != tq:
            return TraceTestResult(False, k + 1, a, s, (tp, tq))
    return TraceTestResult(True, trials)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_VAR_RE = re.compile(r"X(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, m: int) -> NcPoly:
    """Parse text like ``"3 X1 X2 X1 - 1/2 X2^2 + 1"``.

    Factors are whitespace or ``*`` separated; ``X2^3`` abbreviates ``X2 X2 X2``.
    """
    text = text.replace("−", "-").strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: Dict[Word, Fraction] = {}
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(sign)
        word = []
        for tok in match.group(2).replace("*", " ").split():
            var = _VAR_RE.match(tok)
            if var:
                i = int(var.group(1)) - 1
                word.extend([i] * int(var.group(2) or 1))
            elif word:
                raise ValueError(f"coefficient {tok!r} must precede the variables")
            else:
                coeff *= Fraction(tok)
        key = tuple(word)
        terms[key] = terms.get(key, 0) + coeff
    return NcPoly(m, terms)


def format_poly(p: NcPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for w, c in sorted(p.terms.items(), key=lambda t: (len(t[0]), t[0])):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        vars_ = " ".join(f"X{i + 1}" for i in w)
        if not vars_:
            body = format_rational(mag)
        elif mag == 1:
            body = vars_
        else:
            body = f"{format_rational(mag)} {vars_}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def random_poly(m: int, rng: np.random.Generator, max_terms: int = 4, max_len: int = 4,
                bound: int = 5) -> NcPoly:
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        length = int(rng.integers(0, max_len + 1))
        word = tuple(int(i) for i in rng.integers(0, m, size=length))
        terms[word] = int(rng.integers(-bound, bound + 1))
    return NcPoly(m, terms)

