from fractions import Fraction
import random

import pytest

from multiwz.poly import Poly, VarSet

SEED = 20260415


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_poly(rng, vs, max_terms=5, max_deg=3, coeff_range=5):
    """Sparse polynomial with small rational coefficients."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_deg) if rng.random() < 0.5 else 0 for _ in range(vs.nvars))
        num = rng.randint(-coeff_range, coeff_range)
        den = rng.randint(1, 3)
        terms[mono] = terms.get(mono, 0) + Fraction(num, den)
    return Poly(vs, terms)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
