"""Infinite primes and twin primes as certificate-producing decisions.

Every positive verdict carries enough data to be re-checked by exact
arithmetic: lambda certificates carry ``(q, k)``, squares carry their root,
composites carry a factor pair, and primes carry the chain of results that
justify them.

A *lambda-form* is ``q*①^k`` with ``q > 0`` rational and ``k >= 1`` an
integer.  Since ① is divisible by every finite integer, so is any such
term, which is the hypothesis of all the infinite-prime rules below.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    GROSSONE,
    ONE,
    GrossNumber,
    Trilean,
    int_root,
    decompose,
    div,
    is_integer,
    mul,
    sub,
)
from .errors import LambdaNotSquare, NegativeM, NotPrimeParameter
from .finite import DETERMINISTIC_LIMIT, find_factor, is_prime_small, primes_up_to

THEOREM_1 = "Theorem 1"
LEMMA_1 = "Lemma 1"
LEMMA_2 = "Lemma 2"
LEMMA_3 = "Lemma 3"
THEOREM_2 = "Theorem 2"
AXIOM = "Infinite Unit Axiom"

_TRIAL_LIMIT = 10_000


@dataclass(frozen=True)
class TraceStep:
    cite: str
    claim: str

    def __str__(self):
        return f"{self.cite}: {self.claim}"


@dataclass(frozen=True)
class LambdaCert:
    q: Fraction
    k: int

    @property
    def value(self) -> GrossNumber:
        return GrossNumber(((self.q, Fraction(self.k)),))


def lambda_certify(x: GrossNumber) -> LambdaCert | None:
    if len(x.terms) != 1:
        return None
    q, k = x.terms[0]
    if q <= 0 or k <= 0 or k.denominator != 1:
        return None
    return LambdaCert(q, k.numerator)


# squareness


@dataclass(frozen=True)
class Square:
    root: GrossNumber


@dataclass(frozen=True)
class NotSquare:
    witness_prime: int


@dataclass(frozen=True)
class UnknownSquareness:
    reason: str


SquarenessVerdict = Square | NotSquare | UnknownSquareness


def _odd_valuation_primes(n: int) -> list[int] | None:
    """Primes with odd valuation in the positive integer ``n``.

    Trial division up to ``_TRIAL_LIMIT``; the leftover cofactor is
    handled when it is 1, an even power, or a power of a provable prime.
    Returns None when the leftover cannot be settled.
    """
    odd = []
    for p in primes_up_to(_TRIAL_LIMIT):
        if p * p > n:
            break
        if n % p == 0:
            v = 0
            while n % p == 0:
                n //= p
                v += 1
            if v % 2:
                odd.append(p)
    if n == 1:
        return odd
    if n < _TRIAL_LIMIT**2:
        return odd + [n]
    # leftover has no factor below the trial limit: settle it if it is s^j with s provably prime
    base, j = n, 1
    for k in range(n.bit_length() // 13, 1, -1):
        root = int_root(n, k)
        if root is not None:
            base, j = root, k
            break
    if j % 2 == 0:
        return odd
    if base < DETERMINISTIC_LIMIT and is_prime_small(base):
        return odd + [base]
    return None


def squareness(cert: LambdaCert) -> SquarenessVerdict:
    """Certify ``q*①^k`` as a square, refute it, or admit ignorance.

    Square needs an even k and a rational square coefficient.  NotSquare
    needs an even k and exactly one prime with odd valuation in q, which
    is the shape ``lambda'/p^(2m+1)`` with lambda' a square.  Odd k is never
    decided.
    """
    q, k = cert.q, cert.k
    if k % 2:
        return UnknownSquareness(f"odd grossone degree {k}")
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Square(GrossNumber(((Fraction(num, den), Fraction(k // 2)),)))
    # numerator and denominator are coprime, so parities of valuations add
    odd = _odd_valuation_primes(q.numerator * q.denominator)
    if odd is None:
        return UnknownSquareness(f"could not factor the coefficient {q}")
    if len(odd) == 1:
        return NotSquare(odd[0])
    return UnknownSquareness(f"coefficient {q} has {len(odd)} primes of odd valuation")


# primality


class Rule(enum.Enum):
    R1 = "R1"
    R2 = "R2"
    FINITE = "Finite"


@dataclass(frozen=True)
class Prime:
    rule: Rule
    trace: tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class Composite:
    witness: GrossNumber
    cofactor: GrossNumber
    trace: tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class NotInteger:
    trace: tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class NotPositive:
    trace: tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class UnknownPrimality:
    reason: str
    trace: tuple[TraceStep, ...] = ()


PrimalityVerdict = Prime | Composite | NotInteger | NotPositive | UnknownPrimality


def _finite_verdict(n: int) -> PrimalityVerdict:
    try:
        prime = is_prime_small(n)
    except ValueError:
        return UnknownPrimality(f"finite integer {n} is beyond the deterministic primality range")
    if prime:
        return Prime(Rule.FINITE, (TraceStep("finite", f"{n} passes deterministic primality testing"),))
    d = find_factor(n)
    step = TraceStep("finite", f"{d} divides {n}")
    return Composite(GrossNumber.from_scalar(d), GrossNumber.from_scalar(n // d), (step,))


def _lambda_step(lam: GrossNumber) -> TraceStep:
    return TraceStep(LEMMA_1, f"λ = {lam} is purely infinite, simple and divisible by every finite integer")


def classify_prime(x: GrossNumber) -> PrimalityVerdict:
    """Decide primality of ``x`` where a known rule applies.

    Rules are tried in order: sign, integrality, finite primality, then the
    lambda rules on ``x = λ + c`` for a lambda-form ``λ`` and finite ``c``:
    ``c = 1`` is prime, ``c = -1`` is prime exactly when ``λ`` is not a
    square, ``c = 0`` has the factor 2 and ``|c| >= 2`` has the factor ``|c|``.
    Anything else is Unknown.
    """
    if x.sign() <= 0:
        return NotPositive()
    integral = is_integer(x)
    if integral is Trilean.FALSE:
        return NotInteger()
    if integral is Trilean.UNKNOWN:
        return UnknownPrimality(f"integrality of {x} is undecided")

    parts = decompose(x)
    c = parts.finite_part.numerator
    if not parts.infinite_part:
        return _finite_verdict(c)

    lam = parts.infinite_part
    cert = lambda_certify(lam)
    if cert is None:
        return UnknownPrimality(
            "no known rule applies",
            (TraceStep("rule", f"infinite part {lam} is not a single positive integer grosspower"),),
        )

    base = (_lambda_step(lam),)
    if c == 1:
        step = TraceStep(THEOREM_1, f"{x} = λ + 1 has no nontrivial divisor")
        return Prime(Rule.R1, base + (step,))
    if c == -1:
        verdict = squareness(cert)
        if isinstance(verdict, Square):
            r = verdict.root
            step = TraceStep(LEMMA_2, f"λ = ({r})^2, so λ - 1 = ({r} - 1)({r} + 1)")
            return Composite(sub(r, ONE), r + 1, base + (step,))
        if isinstance(verdict, NotSquare):
            p = verdict.witness_prime
            return Prime(
                Rule.R2,
                base
                + (
                    TraceStep(LEMMA_3, f"{p} is the only prime of odd valuation in {cert.q}, so λ is not a square"),
                    TraceStep(LEMMA_2, f"{x} = λ - 1 with λ not a square"),
                ),
            )
        return UnknownPrimality(
            f"squareness of λ undecided: {verdict.reason}",
            base + (TraceStep(LEMMA_2, "applies only once squareness of λ is decided"),),
        )
    if c == 0:
        step = TraceStep(AXIOM, "2 divides λ")
        return Composite(GrossNumber.from_scalar(2), div(lam, GrossNumber.from_scalar(2)), base + (step,))
    d = GrossNumber.from_scalar(abs(c))
    step = TraceStep(AXIOM, f"{abs(c)} divides both λ and {c}")
    return Composite(d, div(x, d), base + (step,))


# twins and families


@dataclass(frozen=True)
class TwinPair:
    lower: GrossNumber
    upper: GrossNumber
    lam: LambdaCert
    p: int
    m: int
    trace: tuple[TraceStep, ...] = field(default=())


def _check_prime_param(p: int) -> None:
    if not isinstance(p, int) or not is_prime_small(p):
        raise NotPrimeParameter(f"{p} is not a finite prime")


def _require_square(cert: LambdaCert) -> Square:
    verdict = squareness(cert)
    if not isinstance(verdict, Square):
        raise LambdaNotSquare(f"{cert.value} is not certified as a square")
    return verdict


def _scaled(cert: LambdaCert, p: int, m: int) -> GrossNumber:
    return GrossNumber(((cert.q / p ** (2 * m + 1), Fraction(cert.k)),))


def make_twins(cert: LambdaCert, p: int, m: int) -> TwinPair:
    """Build ``(λ/p^(2m+1) - 1, λ/p^(2m+1) + 1)`` and classify both members.

    ``m = 0`` is accepted.  Each member is run through
    :func:`classify_prime`; a non-Prime result raises AssertionError since
    the construction guarantees primality.
    """
    square = _require_square(cert)
    _check_prime_param(p)
    if m < 0:
        raise NegativeM(f"m must be nonnegative, got {m}")
    x = _scaled(cert, p, m)
    lower, upper = sub(x, ONE), x + 1
    lo_v, up_v = classify_prime(lower), classify_prime(upper)
    if not (isinstance(lo_v, Prime) and lo_v.rule is Rule.R2 and isinstance(up_v, Prime) and up_v.rule is Rule.R1):
        raise AssertionError(f"twin construction produced non-prime member: {lo_v}, {up_v}")
    trace = (
        TraceStep(LEMMA_2, f"λ = ({square.root})^2 is a square"),
        TraceStep(LEMMA_3, f"x = λ/{p}^{2 * m + 1} is not a square (witness {p})"),
        TraceStep(THEOREM_1, f"x + 1 = {upper} is prime"),
        TraceStep(LEMMA_2, f"x - 1 = {lower} is prime"),
        TraceStep(THEOREM_2, "x - 1 and x + 1 are twin primes"),
    )
    return TwinPair(lower, upper, cert, p, m, trace)


def enumerate_A(cert: LambdaCert, p: int, count: int, m_start: int = 1) -> list[GrossNumber]:
    """First ``count`` members ``λ/p^(2m+1)``, ``m = m_start, m_start+1, ...``.

    Only finite prefixes exist here; the full family's size has no closed
    numeral.
    """
    _check_prime_param(p)
    if count < 1:
        raise ValueError("count must be positive")
    if m_start < 0:
        raise NegativeM(f"m_start must be nonnegative, got {m_start}")
    return [_scaled(cert, p, m) for m in range(m_start, m_start + count)]


def enumerate_B(cert: LambdaCert, p: int, count: int, m_start: int = 1) -> list[GrossNumber]:
    _require_square(cert)
    out = []
    for x in enumerate_A(cert, p, count, m_start):
        out += [sub(x, ONE), x + 1]
    return out


class SetId(enum.Enum):
    NATURALS = "naturals"
    EVENS = "evens"
    ODDS = "odds"
    INTEGERS = "integers"


def set_count(set_id: SetId) -> GrossNumber:
    """Number of elements of a standard infinite set, measured in ①."""
    set_id = SetId(set_id.lower()) if isinstance(set_id, str) else set_id
    if set_id is SetId.NATURALS:
        return GROSSONE
    if set_id in (SetId.EVENS, SetId.ODDS):
        return div(GROSSONE, GrossNumber.from_scalar(2))
    return mul(GrossNumber.from_scalar(2), GROSSONE) + 1
