# tests/test_groups.py
import numpy as np
import pytest

from diagram_engine.config import CONSTRUCTION_TOLERANCE, CONTINUOUS_TOLERANCE
from diagram_engine.core.errors import OddDimension, ShapeMismatch
from diagram_engine.core.operators import DenseOperator, TensorVector
from diagram_engine.core.setpart import DiagramShape
from diagram_engine.core.utils import make_rng
from diagram_engine.services.functors import GroupTag, spanning_set
from diagram_engine.services.groups import (
    check_equivariance,
    membership_residual,
    rho_apply,
    sample,
    symplectic_form,
)


@pytest.mark.parametrize(
    "group,n",
    [(GroupTag.SYM, 4), (GroupTag.ORTH, 3), (GroupTag.SYMP, 2), (GroupTag.SYMP, 4), (GroupTag.SPEC_ORTH, 3)],
)
def test_samples_are_group_members(group, n):
    """Test sampled elements satisfy their defining equations"""
    for seed in range(5):
        assert membership_residual(sample(group, n, seed)) < CONSTRUCTION_TOLERANCE


def test_sample_is_deterministic():
    """Test the same seed gives the same element"""
    a = sample(GroupTag.ORTH, 3, 11)
    b = sample(GroupTag.ORTH, 3, 11)
    assert np.array_equal(a.matrix, b.matrix)


def test_permutation_sample_is_exact():
    """Test permutation matrices are integer 0/1 matrices"""
    g = sample(GroupTag.SYM, 4, 0)
    assert g.is_exact
    assert sorted(g.matrix.sum(axis=0).tolist()) == [1, 1, 1, 1]


def test_symplectic_odd_dimension():
    """Test the symplectic group needs even n"""
    with pytest.raises(OddDimension):
        sample(GroupTag.SYMP, 3, 0)


def test_spec_orth_determinant():
    """Test SO(n) samples have determinant one"""
    for seed in range(5):
        assert np.linalg.det(sample(GroupTag.SPEC_ORTH, 2, seed).matrix) == pytest.approx(1.0)


def test_symplectic_form():
    """Test J in the interleaved order"""
    assert np.array_equal(symplectic_form(2), np.array([[0, 1], [-1, 0]]))


def test_rho_apply_product_vector():
    """Test rho_k(g) acts factorwise on a product vector"""
    g = sample(GroupTag.ORTH, 2, 3)
    x = np.array([1.0, 2.0])
    y = np.array([-1.0, 0.5])
    v = TensorVector.floating(2, 2, np.kron(x, y))
    result = rho_apply(g, 2, v)
    assert np.allclose(result.values, np.kron(g.matrix @ x, g.matrix @ y))
    with pytest.raises(ShapeMismatch):
        rho_apply(g, 3, v)


def test_group_element_product():
    """Test products stay in the group"""
    g = sample(GroupTag.SYMP, 2, 1) @ sample(GroupTag.SYMP, 2, 2)
    assert membership_residual(g) < CONSTRUCTION_TOLERANCE


@pytest.mark.parametrize("group", list(GroupTag))
def test_rho_is_a_homomorphism(group):
    """Test rho_k(g h) v equals rho_k(g) rho_k(h) v for orders 0 through 3"""
    rng = make_rng(7)
    dimensions = (2, 4) if group == GroupTag.SYMP else (1, 2, 3, 4)
    for n in dimensions:
        for k in range(4):
            g = sample(group, n, 2 * k + 1)
            h = sample(group, n, 2 * k + 2)
            for _ in range(50):
                if group == GroupTag.SYM:
                    v = TensorVector.exact(n, k, rng.integers(-9, 10, size=n**k).tolist())
                    assert rho_apply(g @ h, k, v) == rho_apply(g, k, rho_apply(h, k, v))
                else:
                    v = TensorVector.floating(n, k, rng.uniform(-1.0, 1.0, size=n**k))
                    staged = rho_apply(g, k, rho_apply(h, k, v))
                    assert rho_apply(g @ h, k, v).max_deviation(staged) < CONTINUOUS_TOLERANCE


def test_equivariance_exact_for_permutations():
    """Test S_n spanning matrices commute exactly with permutations"""
    for seed in range(5):
        g = sample(GroupTag.SYM, 3, seed)
        for M in spanning_set(GroupTag.SYM, 2, 1, 3):
            assert check_equivariance(g, M) == 0


@pytest.mark.parametrize("group,n", [(GroupTag.ORTH, 3), (GroupTag.SYMP, 2), (GroupTag.SPEC_ORTH, 2)])
def test_equivariance_continuous(group, n):
    """Test spanning matrices commute with continuous group samples"""
    for seed in range(3):
        g = sample(group, n, seed)
        for M in spanning_set(group, 1, 1, n) + spanning_set(group, 2, 0, n):
            assert check_equivariance(g, M) < CONTINUOUS_TOLERANCE


def test_matrix_unit_is_not_equivariant():
    """Test a bare matrix unit fails for some sample"""
    entries = np.zeros((3, 3), dtype=np.int64)
    entries[0, 0] = 1
    unit = DenseOperator(DiagramShape(1, 1), 3, entries)
    residuals = [check_equivariance(sample(GroupTag.SYM, 3, seed), unit) for seed in range(10)]
    assert max(residuals) > 0
