"""Canonical grossone numerals and their exact arithmetic.

A gross-number is a finite sum ``c1*G^p1 + c2*G^p2 + ...`` with rational
coefficients and rational exponents, where ``G`` (printed ``①``) is the
infinite unit.  Values are kept in canonical form: exponents strictly
decreasing, no zero coefficients, zero is the empty sum.  Everything here
is exact; :class:`fractions.Fraction` is the scalar type throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

from .errors import (
    DivisionByZero,
    NonIntegerExponent,
    NonPositivePoint,
    NotRepresentable,
    ZeroToNegativePower,
)

Rational = Fraction
Term = tuple[Fraction, Fraction]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or exact decimal string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class Trilean(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    def __bool__(self):
        raise TypeError("Trilean has no truth value; compare against Trilean.TRUE")


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class _GrossoneExponent:
    """Sentinel for ``x ** ①``; only ``0**①`` and ``1**①`` are defined."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "GROSSONE_EXPONENT"


GROSSONE_EXPONENT = _GrossoneExponent()


class GrossNumber:
    """Immutable canonical sum of grosspower terms.

    ``terms`` is a tuple of ``(coeff, expo)`` pairs of Fractions with
    strictly decreasing exponents and nonzero coefficients.  Build values
    with :func:`normalize`, :meth:`from_scalar` or arithmetic on
    :data:`GROSSONE`; the raw constructor trusts its input.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: tuple[Term, ...] = ()):
        self.terms = terms
        self._hash = None

    @classmethod
    def from_scalar(cls, value: Scalar) -> GrossNumber:
        q = to_rational(value)
        return cls(((q, _ZERO),)) if q else ZERO

    @classmethod
    def term(cls, coeff: Scalar, expo: Scalar = 1) -> GrossNumber:
        c = to_rational(coeff)
        return cls(((c, to_rational(expo)),)) if c else ZERO

    # structure

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        """True when the value is a plain finite rational (no ① terms)."""
        t = self.terms
        return not t or (len(t) == 1 and t[0][1] == 0)

    def as_rational(self) -> Fraction:
        if not self.terms:
            return _ZERO
        if not self.is_rational():
            raise ValueError(f"{self} is not a finite rational")
        return self.terms[0][0]

    def leading(self) -> Term:
        return self.terms[0]

    def sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0][0] > 0 else -1

    # python protocol

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.as_rational()) if self.is_rational() else hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"GrossNumber({self.terms!r})"

    def __str__(self):
        from .parser import format_number

        return format_number(self, "unicode")

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return neg(self)

    def __pos__(self):
        return self

    def __abs__(self):
        return neg(self) if self.sign() < 0 else self

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else div(other, self)

    def __pow__(self, exponent):
        if isinstance(exponent, GrossNumber):
            if exponent == GROSSONE:
                exponent = GROSSONE_EXPONENT
            elif exponent.is_rational():
                exponent = exponent.as_rational()
            else:
                raise NotRepresentable(f"exponent {exponent} is not finite")
        return power(self, exponent)

    def _cmp(self, other, accept):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return cmp(self, other) in accept

    def __lt__(self, other):
        return self._cmp(other, (Ordering.LESS,))

    def __le__(self, other):
        return self._cmp(other, (Ordering.LESS, Ordering.EQUAL))

    def __gt__(self, other):
        return self._cmp(other, (Ordering.GREATER,))

    def __ge__(self, other):
        return self._cmp(other, (Ordering.GREATER, Ordering.EQUAL))


def _coerce(value):
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GrossNumber.from_scalar(value)
    return NotImplemented


def as_gross(value) -> GrossNumber:
    """Accept a GrossNumber, int or Fraction and return a GrossNumber."""
    result = _coerce(value)
    if result is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a gross-number")
    return result


ZERO = GrossNumber(())
ONE = GrossNumber(((_ONE, _ZERO),))
GROSSONE = GrossNumber(((_ONE, _ONE),))


def normalize(terms: Iterable[tuple[Scalar, Scalar]]) -> GrossNumber:
    """Merge like exponents, drop zero coefficients, sort by exponent descending."""
    acc: dict[Fraction, Fraction] = {}
    for coeff, expo in terms:
        e = to_rational(expo)
        acc[e] = acc.get(e, _ZERO) + to_rational(coeff)
    return GrossNumber(tuple((c, e) for e, c in sorted(acc.items(), reverse=True) if c))


def _merge(a: tuple[Term, ...], b: tuple[Term, ...]) -> GrossNumber:
    # both inputs already canonical: a linear merge keeps the order
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ca, ea = a[i]
        cb, eb = b[j]
        if ea > eb:
            out.append(a[i])
            i += 1
        elif eb > ea:
            out.append(b[j])
            j += 1
        else:
            c = ca + cb
            if c:
                out.append((c, ea))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return GrossNumber(tuple(out))


def add(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    if not a.terms:
        return b
    if not b.terms:
        return a
    return _merge(a.terms, b.terms)


def neg(a: GrossNumber) -> GrossNumber:
    return GrossNumber(tuple((-c, e) for c, e in a.terms))


def sub(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    return add(a, neg(b))


def mul(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    if not a.terms or not b.terms:
        return ZERO
    if len(b.terms) == 1:
        cb, eb = b.terms[0]
        return GrossNumber(tuple((ca * cb, ea + eb) for ca, ea in a.terms))
    if len(a.terms) == 1:
        return mul(b, a)
    return normalize((ca * cb, ea + eb) for ca, ea in a.terms for cb, eb in b.terms)


def div(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    """Exact quotient ``a / b``.

    Single-term divisors divide term by term.  Otherwise long division on
    leading terms is run; a quotient exponent below
    ``min_expo(a) - min_expo(b)`` can never appear in an exact quotient, so
    reaching one means the quotient is an infinite series and
    :class:`NotRepresentable` is raised.
    """
    if not b.terms:
        raise DivisionByZero("division by zero")
    if not a.terms:
        return ZERO
    if len(b.terms) == 1:
        cb, eb = b.terms[0]
        return GrossNumber(tuple((ca / cb, ea - eb) for ca, ea in a.terms))

    lead_c, lead_e = b.terms[0]
    floor = a.terms[-1][1] - b.terms[-1][1]
    quotient = []
    rem = a
    while rem.terms:
        rc, re = rem.terms[0]
        qe = re - lead_e
        if qe < floor:
            raise NotRepresentable(f"({a}) / ({b}) has no finite gross-number quotient")
        qc = rc / lead_c
        quotient.append((qc, qe))
        rem = sub(rem, mul(b, GrossNumber(((qc, qe),))))
    return GrossNumber(tuple(quotient))


def int_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative int, or None."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """Exact rational k-th root of ``q`` (k >= 1), or None if irrational."""
    if q < 0:
        if k % 2 == 0:
            return None
        r = rational_root(-q, k)
        return None if r is None else -r
    num = int_root(q.numerator, k)
    den = int_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def power(x: GrossNumber, e) -> GrossNumber:
    """Raise ``x`` to an integer, rational or grossone exponent.

    Integer exponents always work on any base (negatives need a single
    term).  Non-integer rational exponents need a single-term base whose
    coefficient has an exact rational root.  ``GROSSONE_EXPONENT`` covers
    only ``0**① = 0`` and ``1**① = 1``.
    """
    if e is GROSSONE_EXPONENT:
        if x == ZERO:
            return ZERO
        if x == ONE:
            return ONE
        raise NotRepresentable(f"({x})^① is not representable")

    e = to_rational(e)
    if e == 0:
        return ONE
    if not x.terms:
        if e < 0:
            raise ZeroToNegativePower("zero raised to a negative power")
        return ZERO

    if e.denominator == 1:
        n = e.numerator
        if n > 0:
            result, base = ONE, x
            while n:
                if n & 1:
                    result = mul(result, base)
                n >>= 1
                if n:
                    base = mul(base, base)
            return result
        if len(x.terms) != 1:
            raise NotRepresentable(f"({x})^{n} is an infinite series")
        c, p = x.terms[0]
        return GrossNumber(((c**n, p * n),))

    if len(x.terms) != 1:
        raise NotRepresentable(f"({x})^({e}) is not a finite gross-number")
    c, p = x.terms[0]
    root = rational_root(c, e.denominator)
    if root is None:
        raise NotRepresentable(f"{c}^({e}) is irrational")
    return GrossNumber(((root**e.numerator, p * e),))


def cmp(a: GrossNumber, b: GrossNumber) -> Ordering:
    """Total order: the sign of the leading coefficient of ``a - b``."""
    d = sub(a, b)
    return Ordering(d.sign())


@dataclass(frozen=True)
class Decomposition:
    infinite_part: GrossNumber
    finite_part: Fraction
    infinitesimal_part: GrossNumber

    def recompose(self) -> GrossNumber:
        return add(add(self.infinite_part, GrossNumber.from_scalar(self.finite_part)), self.infinitesimal_part)


def decompose(x: GrossNumber) -> Decomposition:
    inf, fin, eps = [], _ZERO, []
    for c, e in x.terms:
        if e > 0:
            inf.append((c, e))
        elif e < 0:
            eps.append((c, e))
        else:
            fin = c
    return Decomposition(GrossNumber(tuple(inf)), fin, GrossNumber(tuple(eps)))


@dataclass(frozen=True)
class ShapeClass:
    is_zero: bool
    is_finite: bool
    is_purely_infinite: bool
    has_infinitesimal: bool
    is_simple: bool
    is_compound: bool


def classify_shape(x: GrossNumber) -> ShapeClass:
    # is_finite means "no infinite part"; an infinitesimal tail is allowed
    d = decompose(x)
    compound = len(d.infinite_part) >= 2
    return ShapeClass(
        is_zero=x.is_zero(),
        is_finite=d.infinite_part.is_zero(),
        is_purely_infinite=bool(d.infinite_part) and d.finite_part == 0 and d.infinitesimal_part.is_zero(),
        has_infinitesimal=bool(d.infinitesimal_part),
        is_simple=not compound,
        is_compound=compound,
    )


def is_integer(x: GrossNumber) -> Trilean:
    """Decide integrality term by term.

    ``q*①^k`` with k a positive integer is an integer for any rational q,
    because ① is divisible by every finite integer.  Positive non-integer
    powers are undecided, negative powers and non-integer finite parts are
    never integers.
    """
    unknown = False
    for c, e in x.terms:
        if e > 0:
            if e.denominator != 1:
                unknown = True
        elif e < 0 or c.denominator != 1:
            return Trilean.FALSE
    return Trilean.UNKNOWN if unknown else Trilean.TRUE


def divides(d: GrossNumber, x: GrossNumber) -> Trilean:
    if not d.terms:
        raise DivisionByZero("divisibility by zero is undefined")
    try:
        q = div(x, d)
    except NotRepresentable:
        if is_integer(d) is Trilean.TRUE and is_integer(x) is Trilean.TRUE:
            return Trilean.FALSE
        return Trilean.UNKNOWN
    return is_integer(q)


def eval_at(x: GrossNumber, t: Scalar) -> Fraction:
    """Substitute a positive rational ``t`` for ① (integer exponents only)."""
    t = to_rational(t)
    if t <= 0:
        raise NonPositivePoint(f"substitution point must be positive, got {t}")
    total = _ZERO
    for c, e in x.terms:
        if e.denominator != 1:
            raise NonIntegerExponent(f"exponent {e} is not an integer")
        total += c * t ** e.numerator
    return total
