import ast
import pathlib
import random

import pytest

from toricpoisson.engine import cohomology
from toricpoisson.linalg import rank
from toricpoisson.oracle import (
    WeightPreservationError,
    block_differential,
    cohomology_oracle,
    compare,
    d_pi_matrix,
    section_basis,
)
from toricpoisson.report import MissingDegreeBound
from toricpoisson.scalar import Scalar
from toricpoisson.toric import PoissonStructure, Space, standard_structure

P2, P3, C2 = Space.projective(2), Space.projective(3), Space.affine(2)
e12 = PoissonStructure.from_upper(2, {(1, 2): 1})


def test_section_basis_sizes():
    assert [len(section_basis(P2, k)) for k in range(4)] == [1, 8, 10, 0]
    assert len(section_basis(P3, 0)) == 1
    assert len(section_basis(P3, 1)) == 15


def test_euler_block_ranks():
    # dim F_1 = 9, dim F_2 = 18 on CP^2
    b1, b2 = section_basis(P2, 1), section_basis(P2, 2)
    assert sum(len(b.monomials) for b in b1.blocks.values()) == 9
    assert sum(len(b.monomials) for b in b2.blocks.values()) == 18
    assert sum(b.euler.rank for b in b2.blocks.values()) == 8


def test_d_pi_matrix_examples():
    B = [section_basis(P2, k) for k in range(4)]
    st2 = standard_structure(2)
    assert rank(d_pi_matrix(P2, st2, 0, (B[0], B[1]))) == 0
    assert rank(d_pi_matrix(P2, st2, 1, (B[1], B[2]))) == 6
    assert d_pi_matrix(P2, PoissonStructure.zero(2), 1, (B[1], B[2])).is_zero()


def test_d_pi_matrix_inconsistent_bases():
    B = [section_basis(P2, k) for k in range(3)]
    with pytest.raises(ValueError):
        d_pi_matrix(P2, standard_structure(2), 0, (B[0], B[2]))
    with pytest.raises(ValueError):
        d_pi_matrix(C2, e12, 0, (section_basis(C2, 0, 2), section_basis(C2, 1, 3)))


def test_oracle_examples():
    assert cohomology_oracle(P2, standard_structure(2)).dims() == (1, 2, 4)
    assert cohomology_oracle(P2, PoissonStructure.zero(2)).dims() == (1, 8, 10)
    r = cohomology_oracle(C2, e12, degree_bound=6)
    assert r.dims() == (1, 2, 2)
    assert all(e.truncated for e in r.entries)


def test_oracle_needs_bound_on_affine():
    with pytest.raises(MissingDegreeBound):
        cohomology_oracle(C2, e12)
    with pytest.raises(MissingDegreeBound):
        section_basis(C2, 1)


def test_compare_standard():
    for n in (2, 3):
        sp = Space.projective(n)
        assert not compare(cohomology(sp, standard_structure(n)), cohomology_oracle(sp, standard_structure(n)))


def test_compare_random_cp2():
    rng = random.Random(7)
    for _ in range(20):
        Pi = PoissonStructure.random(2, rng)
        assert not compare(cohomology(P2, Pi), cohomology_oracle(P2, Pi))


def test_compare_detects_mismatch():
    eng = cohomology(P2, standard_structure(2))
    orc = cohomology_oracle(P2, standard_structure(2))
    orc.entries[2].dim = 5
    diff = compare(eng, orc)
    assert diff and "H^2" in diff[0]
    other = cohomology_oracle(P2, PoissonStructure.zero(2))
    assert compare(eng, other) == ["poisson structures differ"]


def test_compare_affine_infinite():
    z = PoissonStructure.zero(2)
    eng = cohomology(C2, z, degree_bound=3)
    orc = cohomology_oracle(C2, z, degree_bound=3)
    assert not compare(eng, orc)
    eng.entries[0].truncated = False
    assert compare(eng, orc)


def test_compare_affine_finite_c3():
    Pi = PoissonStructure.from_upper(3, {(1, 2): -2, (1, 3): -1, (2, 3): -1})
    eng = cohomology(Space.affine(3), Pi)
    assert eng.dims() == (1, 4, 5, 3)
    assert not compare(eng, cohomology_oracle(Space.affine(3), Pi, degree_bound=3))
    # a bound below the engine's top weight degree must be reported, not ignored
    diff = compare(eng, cohomology_oracle(Space.affine(3), Pi, degree_bound=2))
    assert any("beyond bound" in d for d in diff)


def test_block_differential_preserves_weight():
    Pi = standard_structure(3)
    M = block_differential(P3, Pi, 1, (0, 0, 0, 0))
    assert M.shape == (len(section_basis(P3, 2).blocks[(0, 0, 0, 0)].reps), 3)


def test_weight_preservation_error_type():
    assert issubclass(WeightPreservationError, AssertionError)


def test_oracle_does_not_import_engine_or_solver():
    src = pathlib.Path(__file__).resolve().parents[1] / "src" / "toricpoisson"
    for name in ("oracle.py", "schouten.py"):
        tree = ast.parse((src / name).read_text())
        for node in ast.walk(tree):
            if isinstance(node, ast.ImportFrom):
                mod = node.module or ""
                assert "engine" not in mod and "solver" not in mod and "kernels" not in mod, (name, mod)


def test_gaussian_structure_cp3():
    Pi = PoissonStructure.from_upper(3, {(1, 2): Scalar(2, 1), (1, 3): Scalar(0, -1), (2, 3): Scalar(1, 3)})
    assert not compare(cohomology(P3, Pi), cohomology_oracle(P3, Pi))
