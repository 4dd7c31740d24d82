import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricpoisson.exterior import DimensionError, ExtElement, ExtVector, contract, sort_sign, wedge
from toricpoisson.scalar import Scalar
from toricpoisson.toric import PoissonStructure, Weight
from conftest import poisson_structures, scalars

e = ExtElement.basis


def test_sort_sign():
    assert sort_sign((2, 1)) == (-1, (1, 2))
    assert sort_sign((1, 2, 3)) == (1, (1, 2, 3))
    assert sort_sign((3, 1, 2)) == (1, (1, 2, 3))
    assert sort_sign((1, 1))[0] == 0


def test_wedge_examples():
    assert wedge(e(2, 1), e(2, 2)) == ExtElement(2, 2, {(1, 2): 1})
    assert wedge(e(2, 1), e(2, 1)).is_zero()
    x = e(2, 1) + e(2, 2)
    y = e(2, 1) - e(2, 2)
    assert wedge(x, y) == ExtElement(2, 2, {(1, 2): -2})


def test_wedge_dimension_mismatch():
    with pytest.raises(DimensionError):
        wedge(e(2, 1), e(3, 1))


def test_index_out_of_range():
    with pytest.raises(ValueError):
        ExtElement(2, 1, {(3,): 1})


def test_contract_examples():
    Pi = PoissonStructure.from_upper(2, {(1, 2): 1})
    assert contract(Weight((0, 0)), Pi).is_zero()
    assert contract(Weight((1, 0)), Pi) == ExtVector([0, 1])
    assert contract(Weight((-1, 2)), Pi) == ExtVector([-2, -1])


def test_json_round_trip_example():
    x = ExtElement(3, 2, {(1, 2): Scalar(1, -1), (2, 3): 2})
    data = json.loads(json.dumps(x.to_json()))
    assert ExtElement.from_json(data) == x


@st.composite
def elements(draw, n=4, degree=None):
    d = draw(st.integers(0, n)) if degree is None else degree
    from itertools import combinations

    keys = list(combinations(range(1, n + 1), d))
    chosen = draw(st.lists(st.sampled_from(keys), max_size=4, unique=True)) if keys else []
    return ExtElement(n, d, {k: draw(scalars()) for k in chosen})


@settings(max_examples=200)
@given(elements(), elements(), elements(), scalars())
def test_wedge_bilinear_and_associative(x, y, z, c):
    assert wedge(x.scale(c), y) == wedge(x, y).scale(c)
    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))
    if x.degree == z.degree:
        assert wedge(x + z, y) == wedge(x, y) + wedge(z, y)


@settings(max_examples=200)
@given(elements(), elements())
def test_wedge_graded_antisymmetry(x, y):
    sign = -1 if (x.degree * y.degree) % 2 else 1
    assert wedge(x, y) == wedge(y, x).scale(sign)


@settings(max_examples=200)
@given(elements())
def test_serialization_canonical(x):
    assert ExtElement.from_json(json.loads(json.dumps(x.to_json()))) == x


@settings(max_examples=200)
@given(
    st.lists(st.integers(-3, 5), min_size=3, max_size=3),
    st.lists(st.integers(-3, 5), min_size=3, max_size=3),
    poisson_structures(3),
    poisson_structures(3),
)
def test_contract_linear(m1, m2, P, Q):
    s = [a + b for a, b in zip(m1, m2)]
    assert contract(Weight(tuple(s)), P) == contract(Weight(tuple(m1)), P) + contract(Weight(tuple(m2)), P)
    assert contract(Weight(tuple(m1)), P + Q) == contract(Weight(tuple(m1)), P) + contract(Weight(tuple(m1)), Q)
