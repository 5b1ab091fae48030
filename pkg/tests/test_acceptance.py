"""Acceptance criteria, one test per criterion (criterion 6 and 7 split by case).

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary for one PASS/FAIL line per test.
"""

import random
import time
from fractions import Fraction as F

import pytest

from grossone import (
    GROSSONE as G,
    GROSSONE_EXPONENT,
    ONE,
    ZERO,
    GrossNumber,
    NotRepresentable,
    Ordering,
    cmp,
    decompose,
    div,
    eval_at,
    evaluate,
    format_number,
    mul,
    parse,
    power,
)
from grossone.finite import finite_analogue_check, lcm_up_to, primes_up_to
from grossone.parser import eval_ast
from grossone.primes import (
    THEOREM_1,
    Composite,
    Prime,
    Rule,
    SetId,
    Square,
    classify_prime,
    lambda_certify,
    make_twins,
    set_count,
    squareness,
)

from conftest import INT_EXPONENTS, is_canonical, random_gross

CASES = 10_000

# every classified input and its verdict, audited by criterion 10
_AUDIT: list = []


def _classify(x):
    verdict = classify_prime(x)
    _AUDIT.append((x, verdict))
    return verdict


class _Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def g(c, e):
    return GrossNumber.term(F(c), F(e))


EQ_321 = [
    (mul(ZERO, G), ZERO),
    (mul(G, ZERO), ZERO),
    (G - G, ZERO),
    (div(G, G), ONE),
    (power(G, 0), ONE),
    (power(ONE, GROSSONE_EXPONENT), ONE),
    (power(ZERO, GROSSONE_EXPONENT), ZERO),
    (mul(ZERO, g(1, -1)), ZERO),
    (mul(g(1, -1), ZERO), ZERO),
    (g(1, -1) - g(1, -1), ZERO),
    (div(g(1, -1), g(1, -1)), ONE),
    (div(5 + g(1, "-3.1"), g(1, "-3.1")), 5 * g(1, "3.1") + 1),
    (power(g(1, -1), 0), ONE),
    (mul(G, g(1, -1)), ONE),
    (mul(G, g(1, "-3.1")), g(1, "-2.1")),
    (div(g(1, "3.1") + 4 * G, G), g(1, "2.1") + 4),
    (div(g(1, "3.1"), g(1, "-3.1")), g(1, "6.2")),
    (power(g(1, "3.1"), 0), ONE),
    (mul(g(1, "3.1"), g(1, -1)), g(1, "2.1")),
    (mul(g(1, "3.1"), g(1, "-3.1")), ONE),
]

EQ_321_TEXT = [
    ("0*①", "0"), ("①*0", "0"), ("①-①", "0"), ("①/①", "1"), ("①^0", "1"), ("1^①", "1"), ("0^①", "0"),
    ("0*①^-1", "0"), ("①^-1*0", "0"), ("①^-1-①^-1", "0"), ("①^-1/①^-1", "1"),
    ("(5+①^-3.1)/①^-3.1", "5①^3.1+1"), ("(①^-1)^0", "1"), ("①*①^-1", "1"), ("①*①^-3.1", "①^-2.1"),
    ("(①^3.1+4①)/①", "①^2.1+4"), ("①^3.1/①^-3.1", "①^6.2"), ("(①^3.1)^0", "1"),
    ("①^3.1*①^-1", "①^2.1"), ("①^3.1*①^-3.1", "1"),
]

EQ_321_CHAIN = [g(1, "3.1"), G, ONE, g(1, -1), g(1, "-3.1"), ZERO]


def test_criterion_01_identities():
    with _Timer(1.0):
        for lhs, rhs in EQ_321:
            assert lhs == rhs
        for lhs, rhs in EQ_321_TEXT:
            assert evaluate(lhs) == evaluate(rhs), lhs
        for a, b in zip(EQ_321_CHAIN, EQ_321_CHAIN[1:]):
            assert cmp(a, b) is Ordering.GREATER


ORDER_CHAIN = ["G/2", "G-1", "G", "G+1", "2G+1", "2G^2-1", "2G^2", "2G^2+1", "2G^2+2"]


def test_criterion_02_ordering_chain():
    # 2^①, 10^① and ①^① members of the chain are not representable and are skipped
    with _Timer(1.0):
        values = [evaluate(t) for t in ORDER_CHAIN]
        for i, a in enumerate(values):
            for j, b in enumerate(values):
                expected = Ordering((i > j) - (i < j))
                assert cmp(a, b) is expected, (ORDER_CHAIN[i], ORDER_CHAIN[j])


def test_criterion_03_factorization():
    with _Timer(1.0):
        assert mul(G - 1, G + 1) == G**2 - 1
        assert div(G**2 - 1, G + 1) == G - 1


def test_criterion_04_corollary():
    with _Timer(2.0):
        for n in range(1, 1001):
            for x in (G / n + 1, G**2 / n + 1):
                verdict = _classify(x)
                assert isinstance(verdict, Prime) and verdict.rule is Rule.R1, x
                assert THEOREM_1 in [s.cite for s in verdict.trace]


def _twins(lam_text, ms):
    cert = lambda_certify(evaluate(lam_text))
    for m in ms:
        pair = make_twins(cert, 2, m)
        assert pair.upper - pair.lower == 2
        for member in (pair.lower, pair.upper):
            assert isinstance(_classify(member), Prime)


def test_criterion_05_twins():
    with _Timer(2.0):
        _twins("G^2", range(51))
        _twins("G^4", range(11))
        _twins("G^16", range(11))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_criterion_06_finite_analogue(p):
    with _Timer(2.0):
        report = finite_analogue_check(25, p, 3)
        assert report.stand_in == lcm_up_to(25) ** 2
        failures = [(c.m, c.reason) for c in report.cases if not c.passed]
        assert not failures, f"p={p}: {failures}"


def _ring_case(rng):
    a, b, c = (random_gross(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a and a * ZERO == ZERO
    assert a + (-a) == ZERO
    for x in (a + b, a * b, a - c, a * b + c):
        assert is_canonical(x)


def _order_case(rng):
    a, b, c = (random_gross(rng) for _ in range(3))
    ab, ba = cmp(a, b), cmp(b, a)
    assert ab == -ba
    assert (ab is Ordering.EQUAL) == (a - b == ZERO)
    if cmp(a, b) is not Ordering.GREATER and cmp(b, c) is not Ordering.GREATER:
        assert cmp(a, c) is not Ordering.GREATER
    lo, hi = (a, b) if ab is Ordering.LESS else (b, a)
    if ab is not Ordering.EQUAL:
        assert cmp(lo + c, hi + c) is Ordering.LESS
        if c.sign() > 0:
            assert cmp(lo * c, hi * c) is Ordering.LESS
    n = GrossNumber.from_scalar(F(rng.randint(-(10**9), 10**9), rng.randint(1, 10**3)))
    assert cmp(G, n) is Ordering.GREATER


def _division_case(rng):
    q, b = random_gross(rng), random_gross(rng)
    if b.is_zero():
        b = ONE
    a = q * b
    assert div(a, b) == q
    assert mul(div(a, b), b) == a
    x, y = random_gross(rng), random_gross(rng)
    if not y.is_zero():
        try:
            r = div(x, y)
        except NotRepresentable:
            return
        assert mul(r, y) == x and is_canonical(r)


def _substitution_case(rng):
    a = random_gross(rng, INT_EXPONENTS)
    b = random_gross(rng, INT_EXPONENTS)
    t = rng.randint(2, 10**9)
    ea, eb = eval_at(a, t), eval_at(b, t)
    assert eval_at(a + b, t) == ea + eb
    assert eval_at(a - b, t) == ea - eb
    assert eval_at(a * b, t) == ea * eb
    if not b.is_zero():
        assert eval_at(div(a * b, b), t) == ea
        try:
            q = div(a, b)
        except NotRepresentable:
            return
        assert eval_at(q, t) == ea / eb


def _round_trip_case(rng):
    x = random_gross(rng)
    for style in ("unicode", "ascii"):
        assert eval_ast(parse(format_number(x, style))) == x


@pytest.mark.parametrize(
    "suite",
    [_ring_case, _order_case, _division_case, _substitution_case, _round_trip_case],
    ids=["ring", "order", "division", "substitution", "round_trip"],
)
def test_criterion_07_properties(suite):
    rng = random.Random(f"criterion-7-{suite.__name__}")
    for _ in range(CASES):
        suite(rng)


def test_criterion_08_finite_consistency():
    sieve = set(primes_up_to(10**5))
    with _Timer(5.0):
        verdicts = [(n, classify_prime(GrossNumber.from_scalar(n))) for n in range(2, 10**5 + 1)]
    for n, verdict in verdicts:
        assert isinstance(verdict, Prime) == (n in sieve), n
        if isinstance(verdict, Composite):
            _AUDIT.append((GrossNumber.from_scalar(n), verdict))


def test_criterion_09_set_counts():
    with _Timer(1.0):
        assert set_count(SetId.NATURALS) == G
        assert set_count(SetId.EVENS) == G / 2
        assert set_count(SetId.ODDS) == G / 2
        assert set_count(SetId.INTEGERS) == 2 * G + 1


DOCUMENTED_CLASSIFY = ["G/2 + 1", "G^2 - 1", "G^2/8 - 1", "G + 5", "G^2 + G + 1", "7", "G + 1/2", "G", "G^2/36 - 1", "G - 7"]
SQUARE_LAMBDAS = ["G^2", "G^4", "G^16", "G^2/36", "9G^6/4", "G^2/2", "G"]


def _audit_inputs():
    yield from (evaluate(t) for t in DOCUMENTED_CLASSIFY)
    for n in range(1, 1001):
        yield G / n + 1
        yield G**2 / n + 1
        yield G / n + n
        yield G**2 / n - 1
    for lam in ("G^2", "G^4", "G^16"):
        cert = lambda_certify(evaluate(lam))
        for m in range(11):
            pair = make_twins(cert, 2, m)
            yield from (pair.lower, pair.upper, (pair.lower + pair.upper) / 2)
    yield from (GrossNumber.from_scalar(n) for n in range(2, 10**4))


def test_criterion_10_soundness_audit():
    classified = [(x, classify_prime(x)) for x in _audit_inputs()] + _AUDIT
    composites = 0
    for x, verdict in classified:
        if isinstance(verdict, Composite):
            composites += 1
            assert verdict.witness * verdict.cofactor == x
            assert cmp(ONE, verdict.witness) is Ordering.LESS
            assert cmp(verdict.witness, x) is Ordering.LESS
    assert composites > 0
    certs = {lambda_certify(decompose(x).infinite_part) for x, _ in classified}
    certs |= {lambda_certify(evaluate(t)) for t in SQUARE_LAMBDAS}
    squares = 0
    for cert in certs - {None}:
        verdict = squareness(cert)
        if isinstance(verdict, Square):
            squares += 1
            assert verdict.root * verdict.root == cert.value
    assert squares > 0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
