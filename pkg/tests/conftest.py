import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from toricpoisson.scalar import Scalar
from toricpoisson.toric import PoissonStructure


def small_fraction(bound=10):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def scalars(bound=10):
    return st.builds(Scalar, small_fraction(bound), small_fraction(bound))


@st.composite
def poisson_structures(draw, n):
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(i, j)] = draw(scalars())
    return PoissonStructure.from_upper(n, entries)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_scalar(rng, bound=10):
    return Scalar(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)), Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))


def random_multivector(rng, ambient, degree, terms=3, max_exp=2):
    from itertools import combinations

    from toricpoisson.schouten import PolyMultivector

    keys = list(combinations(range(ambient), degree))
    out = {}
    for _ in range(rng.randint(1, terms)):
        a = tuple(rng.randint(0, max_exp) for _ in range(ambient))
        out[(a, rng.choice(keys))] = random_scalar(rng, 5)
    return PolyMultivector(ambient, out)



def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[key])
