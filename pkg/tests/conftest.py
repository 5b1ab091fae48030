import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from grossone import GrossNumber, normalize

INT_EXPONENTS = [Fraction(e) for e in (-2, -1, 0, 1, 2, 3)]
ALL_EXPONENTS = INT_EXPONENTS + [Fraction(1, 2), Fraction(31, 10), Fraction(-31, 10), Fraction(-1, 3)]


def is_canonical(x: GrossNumber) -> bool:
    exps = [e for _, e in x.terms]
    return (
        all(isinstance(c, Fraction) and isinstance(e, Fraction) for c, e in x.terms)
        and all(c != 0 for c, _ in x.terms)
        and all(a > b for a, b in zip(exps, exps[1:]))
    )


def random_gross(rng: random.Random, exponents=ALL_EXPONENTS, max_terms=4) -> GrossNumber:
    terms = [
        (Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.choice(exponents))
        for _ in range(rng.randint(0, max_terms))
    ]
    return normalize(terms)


coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def gross_numbers(exponents=ALL_EXPONENTS, max_terms=4):
    term = st.tuples(coefficients, st.sampled_from(exponents))
    return st.lists(term, max_size=max_terms).map(normalize)


@pytest.fixture
def rng():
    return random.Random(20261016)


# acceptance criteria report

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and "test_criterion_" in report.nodeid:
        if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
            _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        mark = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
