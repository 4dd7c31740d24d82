import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricpoisson.exterior import DimensionError, ExtElement
from toricpoisson.scalar import Scalar
from toricpoisson.toric import (
    PoissonStructure,
    Space,
    UnsupportedOperation,
    Weight,
    admissible,
    cocycle_condition,
    cyclic_shift,
    frame,
    full_profile,
    profile,
    standard_structure,
    weight_space_dim,
)

P2, P3 = Space.projective(2), Space.projective(3)


def test_profile_examples():
    p = profile(P2, Weight((-1, 2)))
    assert p.full == (-1, -1, 2)
    assert p.minus_set == (0, 1)
    assert p.size == 2
    assert profile(P3, Weight((0, 0, 0))).minus_set == ()
    q = profile(Space.affine(3), Weight((-1, 0, 5)))
    assert q.full == (-1, 0, 5)
    assert q.minus_set == (1,)
    assert q.size == 1


def test_profile_length_mismatch():
    with pytest.raises((ValueError, DimensionError)):
        profile(P2, Weight((1, 2, 3)))


def test_admissible_examples():
    assert admissible(P2, Weight((-1, 2)), 2)
    assert not admissible(P2, Weight((-1, 2)), 1)
    assert not admissible(P2, Weight((-2, 1)), 2)


def test_frame_examples():
    assert frame(Space.projective(3), profile(Space.affine(3), Weight((-1, -1, 0)))) == ExtElement.basis(3, 1, 2)
    assert frame(P2, profile(P2, Weight((0, 0)))) == ExtElement.scalar(2)
    assert frame(P2, profile(P2, Weight((-1, 2)))) == ExtElement.basis(2, 1, 2)


def test_cocycle_examples():
    st_ = standard_structure(2)
    assert cocycle_condition(P2, Weight((0, 0)), st_)
    assert not cocycle_condition(P2, Weight((1, 0)), st_)
    assert cocycle_condition(P2, Weight((-1, 2)), st_)


def test_weight_space_dim():
    assert weight_space_dim(P2, Weight((0, 0)), 1) == 2
    assert weight_space_dim(P2, Weight((-1, 2)), 2) == 1
    assert weight_space_dim(P3, Weight((-1, 1, 0)), 2) == 2
    assert weight_space_dim(P2, Weight((-1, 2)), 1) == 0


def test_cyclic_shift():
    assert cyclic_shift(P2, Weight((0, 0))) == Weight((0, 0))
    w = Weight((-1, 2))
    x = w
    for _ in range(3):
        x = cyclic_shift(P2, x)
    assert x == w
    with pytest.raises(UnsupportedOperation):
        cyclic_shift(Space.affine(2), w)


def test_standard_structure():
    s = standard_structure(3)
    assert [(i, j) for i, j, _ in s.upper_entries()] == [(1, 2), (1, 3), (2, 3)]
    for i in range(3):
        for j in range(3):
            assert s.A[i][j] == -s.A[j][i]


def test_poisson_json_completion():
    P = PoissonStructure.from_json('[{"i":1,"j":2,"a":"1-i"}]', n=2)
    assert P.A[0][1] == Scalar(1, -1)
    assert P.A[1][0] == Scalar(-1, 1)
    assert PoissonStructure.from_json(json.loads(json.dumps(P.to_json()))) == P


def test_poisson_rejects():
    with pytest.raises(ValueError):
        PoissonStructure.from_json([{"i": 1, "j": 1, "a": "1"}], n=2)
    with pytest.raises(ValueError):
        PoissonStructure.from_json([{"i": 1, "j": 2, "a": "1"}, {"i": 2, "j": 1, "a": "1"}], n=2)
    # consistent duplicate through antisymmetry is fine
    P = PoissonStructure.from_json([{"i": 1, "j": 2, "a": "1"}, {"i": 2, "j": 1, "a": "-1"}], n=2)
    assert P == standard_structure(2)
    with pytest.raises(ValueError):
        PoissonStructure(2, ((Scalar(0), Scalar(1)), (Scalar(1), Scalar(0))))


@settings(max_examples=200)
@given(st.integers(2, 3).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-1, n), min_size=n, max_size=n))))
def test_shift_preserves_admissibility_and_standard_cocycle(arg):
    n, coords = arg
    sp = Space.projective(n)
    w = Weight(tuple(coords))
    s = cyclic_shift(sp, w)
    assert sorted(full_profile(sp, s)) == sorted(full_profile(sp, w))
    for k in range(n + 1):
        assert admissible(sp, w, k) == admissible(sp, s, k)
    Pi = standard_structure(n)
    if admissible(sp, w, n):
        assert cocycle_condition(sp, w, Pi) == cocycle_condition(sp, s, Pi)
