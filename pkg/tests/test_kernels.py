from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricpoisson import kernels
from toricpoisson.scalar import Scalar
from toricpoisson.toric import PoissonStructure, Space, Weight, cocycle_condition, standard_structure
from conftest import poisson_structures

backends = ["numpy"] + (["numba"] if kernels.NUMBA_AVAILABLE else [])


@pytest.mark.parametrize("backend", backends)
def test_admissible_box_counts(backend):
    assert kernels.admissible_box(2, 0, backend=backend).tolist() == [[0, 0]]
    assert len(kernels.admissible_box(2, 1, backend=backend)) == 7
    assert len(kernels.admissible_box(2, 2, backend=backend)) == 10


@pytest.mark.parametrize("n,k", [(3, 1), (3, 3), (4, 2), (5, 5)])
def test_backends_agree_on_box(n, k):
    a = kernels.admissible_box(n, k, backend="numpy")
    if kernels.NUMBA_AVAILABLE:
        b = kernels.admissible_box(n, k, backend="numba")
        assert np.array_equal(a, b)
    # lexicographic row order
    assert [tuple(r) for r in a] == sorted(tuple(r) for r in a)


def test_env_flag_forces_numpy(monkeypatch):
    monkeypatch.setenv(kernels.ENV_FLAG, "1")
    assert kernels.resolve_backend("auto", 10**9) == "numpy"
    monkeypatch.setenv(kernels.ENV_FLAG, "0")
    expected = "numba" if kernels.NUMBA_AVAILABLE else "numpy"
    assert kernels.resolve_backend("auto", 10**9) == expected
    assert kernels.resolve_backend("auto", 1) == "numpy"
    with pytest.raises(ValueError):
        kernels.resolve_backend("gpu")


def test_integer_parts_clears_denominators():
    P = PoissonStructure.from_upper(2, {(1, 2): Scalar(Fraction(1, 2), Fraction(1, 3))})
    re, im = kernels.integer_parts(P, 2)
    assert re[0, 1] == 3 and im[0, 1] == 2
    assert re[1, 0] == -3


def test_integer_parts_overflow_guard():
    P = PoissonStructure.from_upper(2, {(1, 2): Scalar(2**60)})
    assert kernels.integer_parts(P, 2) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: st.tuples(st.just(n), poisson_structures(n))), st.sampled_from(backends))
def test_mask_matches_exact_condition(arg, backend):
    n, Pi = arg
    sp = Space.projective(n)
    W = kernels.admissible_box(n, n, backend="numpy")
    re, im = kernels.integer_parts(Pi, n)
    mask = kernels.cocycle_mask(W, re, im, True, backend=backend)
    exact = [cocycle_condition(sp, Weight(tuple(int(x) for x in r)), Pi) for r in W]
    assert mask.tolist() == exact


@pytest.mark.parametrize("backend", backends)
def test_affine_mask(backend):
    Pi = standard_structure(2)
    W = np.array([[0, 0], [1, 0], [-1, -1], [-1, 0], [2, 3]], dtype=np.int64)
    re, im = kernels.integer_parts(Pi, 3)
    mask = kernels.cocycle_mask(W, re, im, False, backend=backend)
    exact = [cocycle_condition(Space.affine(2), Weight(tuple(r)), Pi) for r in W.tolist()]
    assert mask.tolist() == exact == [True, False, True, False, False]
