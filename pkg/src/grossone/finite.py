"""Classical finite number theory used as ground truth.

Deterministic primality, a twin-prime sieve, and the desk-scale analogue
check that replaces an infinite lambda by ``lcm(1..B)**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotPrimeParameter, PrimeExceedsBound

# Strong-pseudoprime tests to the prime bases 2..41 are exact below this bound.
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# (bound, bases): strong-pseudoprime tests with these bases are exact below bound
_BASE_SETS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, _SMALL_PRIMES),
    (DETERMINISTIC_LIMIT, _SMALL_PRIMES + (41,)),
)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime_small(n: int) -> bool:
    """Exact primality for ``0 <= n < DETERMINISTIC_LIMIT``.

    Raises ValueError above the limit rather than fall back to a
    probabilistic answer.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n >= DETERMINISTIC_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = next(b for bound, b in _BASE_SETS if n < bound)
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """Sieve of Eratosthenes."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def find_factor(n: int) -> int:
    """A nontrivial factor of the composite ``n`` (trial division, then Pollard rho)."""
    for p in primes_up_to(10_000):
        if p * p > n:
            break
        if n % p == 0:
            return p
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def twin_sieve(limit: int) -> list[tuple[int, int]]:
    """All twin pairs ``(p, p + 2)`` with ``p + 2 <= limit``, ascending."""
    if limit < 5:
        raise ValueError("limit must be at least 5")
    primes = primes_up_to(limit)
    return [(p, q) for p, q in zip(primes, primes[1:]) if q - p == 2]


def lcm_up_to(bound: int) -> int:
    if bound < 1:
        raise ValueError("bound must be positive")
    return math.lcm(*range(1, bound + 1))


def factorial_squared(bound: int) -> int:
    return math.factorial(bound) ** 2


STAND_INS = {"lcm": lambda b: lcm_up_to(b) ** 2, "factorial": factorial_squared}


@dataclass(frozen=True)
class AnalogueCase:
    m: int
    passed: bool
    offending_prime: int | None = None
    reason: str | None = None


@dataclass(frozen=True)
class AnalogueReport:
    bound: int
    stand_in: int
    p: int
    m_max: int
    cases: tuple[AnalogueCase, ...] = field(default_factory=tuple)
    stand_in_kind: str = "lcm"

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)


def _first_small_factor(value: int, primes: tuple[int, ...]) -> int | None:
    return next((q for q in primes if value % q == 0), None)


def finite_analogue_check(bound: int, p: int, m_max: int, stand_in: str = "lcm") -> AnalogueReport:
    """Mirror the twin-prime construction with a finite stand-in for lambda.

    With ``N = lcm(1..bound)**2`` (or ``bound!**2``), each ``m`` in
    ``0..m_max`` requires ``p**(2m+1) | N`` and that ``N/p**(2m+1) - 1`` and
    ``N/p**(2m+1) + 1`` have no prime factor up to ``bound``.  The lcm
    stand-in only carries ``p**(2*floor(log_p bound))``, so large ``m``
    fail the divisibility step; those cases are reported, not skipped.
    """
    if not is_prime_small(p):
        raise NotPrimeParameter(f"{p} is not prime")
    if p > bound:
        raise PrimeExceedsBound(f"prime {p} exceeds bound {bound}")
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    n = STAND_INS[stand_in](bound)
    primes = primes_up_to(bound)
    cases = []
    for m in range(m_max + 1):
        modulus = p ** (2 * m + 1)
        if n % modulus:
            cases.append(AnalogueCase(m, False, None, f"{p}^{2 * m + 1} does not divide N"))
            continue
        x = n // modulus
        offender = _first_small_factor(x - 1, primes) or _first_small_factor(x + 1, primes)
        if offender is None:
            cases.append(AnalogueCase(m, True))
        else:
            side = "-" if (x - 1) % offender == 0 else "+"
            cases.append(AnalogueCase(m, False, offender, f"{offender} divides N/{p}^{2 * m + 1} {side} 1"))
    return AnalogueReport(bound, n, p, m_max, tuple(cases), stand_in)
