"""Exact scalars: rationals and multiquadratic towers Q(sqrt(d1), ..., sqrt(dk)).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`TowerScalar`
is stored sparsely as ``{subset bitmask: Fraction}``; bit ``i`` of the mask
stands for ``sqrt(d_i)``, so the element is ``sum c_S * prod_{i in S} sqrt(d_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Dict, Mapping, Tuple, Union

from sympy import factorint

MAX_TOWER_DEPTH = 16


class ContextMismatchError(ValueError):
    """Two tower scalars live in incompatible towers."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return to_fraction(s)


def squarefree_decomposition(r) -> Tuple[int, Fraction]:
    """Write a nonzero rational ``r`` as ``f**2 * s`` with ``s`` a squarefree integer.

    Returns ``(s, f)`` with ``f > 0``.  Uses ``sqrt(p/q) = sqrt(p*q)/q``.
    """
    r = to_fraction(r)
    if r == 0:
        raise ZeroDivisionError("zero has no squarefree part")
    p, q = r.numerator, r.denominator
    sign = -1 if p < 0 else 1
    s, f = sign, 1
    for prime, e in factorint(abs(p) * q).items():
        f *= prime ** (e // 2)
        if e % 2:
            s *= prime
    return s, Fraction(f, q)


@dataclass(frozen=True)
class TowerContext:
    """An ordered list of squarefree radicands defining a degree ``2**k`` field."""

    radicands: Tuple[int, ...] = ()

    def __post_init__(self):
        rads = tuple(int(d) for d in self.radicands)
        object.__setattr__(self, "radicands", rads)
        if len(rads) > MAX_TOWER_DEPTH:
            raise ValueError(f"tower depth {len(rads)} exceeds cap {MAX_TOWER_DEPTH}")
        for i, d in enumerate(rads):
            if d in (0, 1) or squarefree_decomposition(d)[0] != d:
                raise ValueError(f"radicand {d} is not a squarefree integer != 0, 1")
            if _unchecked_context(rads[:i])._subset_for(d) is not None:
                raise ValueError(f"radicand {d} already lies in the tower {rads[:i]}")

    @property
    def depth(self) -> int:
        return len(self.radicands)

    def is_prefix_of(self, other: "TowerContext") -> bool:
        return other.radicands[: self.depth] == self.radicands

    def _subset_for(self, s: int):
        """Return ``(mask, t)`` with ``prod_{i in mask} d_i = s * t**2``, or None."""
        products = {0: 1}
        for i, d in enumerate(self.radicands):
            for mask, prod in list(products.items()):
                products[mask | (1 << i)] = prod * d
        for mask, prod in products.items():
            if _is_square_ratio(prod, s):
                return mask, isqrt(prod // s)
        return None

    def basis_product(self, mask_a: int, mask_b: int) -> Tuple[int, int]:
        """``e_A * e_B = factor * e_{A xor B}``; returns ``(factor, A xor B)``."""
        common = mask_a & mask_b
        factor = 1
        i = 0
        while common:
            if common & 1:
                factor *= self.radicands[i]
            common >>= 1
            i += 1
        return factor, mask_a ^ mask_b

    def to_json(self):
        return list(self.radicands)


def _is_square_ratio(prod: int, s: int) -> bool:
    if prod % s:
        return False
    q = prod // s
    return q > 0 and isqrt(q) ** 2 == q


def _unchecked_context(radicands: Tuple[int, ...]) -> TowerContext:
    # prefixes of a validated context are valid; skip re-factoring them
    ctx = TowerContext.__new__(TowerContext)
    object.__setattr__(ctx, "radicands", radicands)
    return ctx


EMPTY_CONTEXT = TowerContext(())

Scalar = Union[Fraction, "TowerScalar"]


class TowerScalar:
    """An element of a multiquadratic tower over Q.  Immutable."""

    __slots__ = ("context", "_coeffs", "_hash")

    def __init__(self, context: TowerContext, coeffs: Mapping[int, object] = None):
        self.context = context
        size = 1 << context.depth
        clean: Dict[int, Fraction] = {}
        for mask, c in (coeffs or {}).items():
            mask = int(mask)
            if not 0 <= mask < size:
                raise ValueError(f"mask {mask} outside tower of depth {context.depth}")
            c = to_fraction(c)
            if c:
                clean[mask] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def rational(cls, x, context: TowerContext = EMPTY_CONTEXT) -> "TowerScalar":
        return cls(context, {0: x})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, mask: int) -> Fraction:
        return self._coeffs.get(mask, Fraction(0))

    def is_rational(self) -> bool:
        return all(mask == 0 for mask in self._coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficient(0)

    def lift(self, context: TowerContext) -> "TowerScalar":
        if context == self.context:
            return self
        if not self.context.is_prefix_of(context):
            raise ContextMismatchError(
                f"cannot lift from {self.context.radicands} to {context.radicands}"
            )
        return TowerScalar(context, self._coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TowerScalar):
            if other.context == self.context:
                return self, other
            if self.context.is_prefix_of(other.context):
                return self.lift(other.context), other
            if other.context.is_prefix_of(self.context):
                return self, other.lift(self.context)
            raise ContextMismatchError(
                f"contexts {self.context.radicands} and {other.context.radicands} differ"
            )
        if isinstance(other, (int, Rational)):
            return self, TowerScalar.rational(other, self.context)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        out = dict(a._coeffs)
        for mask, c in b._coeffs.items():
            out[mask] = out.get(mask, 0) + c
        return TowerScalar(a.context, out)

    __radd__ = __add__

    def __neg__(self):
        return TowerScalar(self.context, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        ctx = a.context
        out: Dict[int, Fraction] = {}
        for ma, ca in a._coeffs.items():
            for mb, cb in b._coeffs.items():
                factor, mask = ctx.basis_product(ma, mb)
                out[mask] = out.get(mask, 0) + ca * cb * factor
        return TowerScalar(ctx, out)

    __rmul__ = __mul__

    def inverse(self) -> "TowerScalar":
        if not self._coeffs:
            raise ZeroDivisionError("division by zero in tower")
        return TowerScalar(self.context, _invert(self._coeffs, self.context.radicands))

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = TowerScalar.rational(1, self.context)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TowerScalar):
            # equal elements of a common tower have equal sparse coefficients
            if not (
                self.context.is_prefix_of(other.context)
                or other.context.is_prefix_of(self.context)
            ):
                return False
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            other = to_fraction(other)
            if other == 0:
                return not self._coeffs
            return self._coeffs == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coefficient(0))
            else:
                self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self):
        return f"TowerScalar({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        text = ""
        for mask in sorted(self._coeffs):
            c = self._coeffs[mask]
            roots = "*".join(
                f"sqrt({d})"
                for i, d in enumerate(self.context.radicands)
                if mask >> i & 1
            )
            mag = abs(c)
            if not roots:
                term = format_rational(mag)
            elif mag == 1:
                term = roots
            else:
                term = f"{format_rational(mag)}*{roots}"
            if not text:
                text = ("-" if c < 0 else "") + term
            else:
                text += (" - " if c < 0 else " + ") + term
        return text

    def to_json(self):
        return {
            "radicands": self.context.to_json(),
            "coeffs": {str(m): format_rational(c) for m, c in sorted(self._coeffs.items())},
        }

    @classmethod
    def from_json(cls, data) -> "TowerScalar":
        return cls(
            TowerContext(tuple(data["radicands"])),
            {int(k): parse_rational(v) for k, v in data["coeffs"].items()},
        )


def _invert(coeffs: Dict[int, Fraction], radicands: Tuple[int, ...]) -> Dict[int, Fraction]:
    """Inverse in Q(sqrt d_1..sqrt d_k) by peeling off the top radicand.

    With x = a + b*sqrt(d): 1/x = (a - b*sqrt(d)) / (a^2 - d*b^2).
    """
    k = len(radicands)
    if k == 0:
        return {0: 1 / coeffs[0]}
    top = 1 << (k - 1)
    lower = radicands[:-1]
    d = radicands[-1]
    a = {m: c for m, c in coeffs.items() if not m & top}
    b = {m ^ top: c for m, c in coeffs.items() if m & top}
    if not b:
        return _invert(a, lower)
    ctx = _unchecked_context(lower)
    sub = lambda c: TowerScalar(ctx, c)  # noqa: E731
    ta, tb = sub(a), sub(b)
    norm = ta * ta - tb * tb * d
    inv_norm = sub(_invert(norm._coeffs, lower))
    num_a = ta * inv_norm
    num_b = -(tb * inv_norm)
    out = dict(num_a._coeffs)
    for m, c in num_b._coeffs.items():
        out[m | top] = c
    return out


def adjoin_sqrt(context: TowerContext, r) -> Tuple[TowerContext, TowerScalar]:
    """Return a context containing ``sqrt(r)`` together with that element.

    If ``sqrt(r)`` already lies in the tower the context comes back unchanged.
    """
    s, f = squarefree_decomposition(r)
    if s == 1:
        return context, TowerScalar(context, {0: f})
    found = context._subset_for(s)
    if found is not None:
        mask, t = found
        # prod_{mask} sqrt(d_i) squares to s*t^2, so sqrt(s) = e_mask / t
        return context, TowerScalar(context, {mask: f / t})
    new_ctx = TowerContext(context.radicands + (s,))
    return new_ctx, TowerScalar(new_ctx, {1 << context.depth: f})


def lift_scalar(x, context: TowerContext) -> TowerScalar:
    if isinstance(x, TowerScalar):
        return x.lift(context)
    return TowerScalar.rational(x, context)


def scalar_to_json(x):
    if isinstance(x, TowerScalar):
        if x.is_rational():
            return format_rational(x.to_fraction())
        return x.to_json()
    return format_rational(x)


def scalar_from_json(data) -> Scalar:
    if isinstance(data, dict):
        return TowerScalar.from_json(data)
    if isinstance(data, (int, str)):
        return to_fraction(data)
    raise TypeError(f"cannot parse scalar from {data!r}")
