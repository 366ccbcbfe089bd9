# tests/test_rank.py
import pytest

from diagram_engine.core.counting import bell_bounded
from diagram_engine.core.errors import SizeLimitExceeded
from diagram_engine.services.functors import GroupTag, exact_rank, spanning_rank, spanning_set


def test_rank_sym_22_n2():
    """Test the S_2 spanning set on (2,2) has rank Bell(4,2)"""
    assert spanning_rank(GroupTag.SYM, 2, 2, 2) == bell_bounded(4, 2) == 8
    assert len(spanning_set(GroupTag.SYM, 2, 2, 2)) == 8


@pytest.mark.parametrize("k,l,n", [(1, 1, 4), (2, 2, 2), (2, 1, 3), (2, 2, 3), (3, 1, 2)])
def test_sym_spanning_set_is_a_basis(k, l, n):
    """Test the S_n spanning set is linearly independent with Bell(k+l, n) members"""
    matrices = spanning_set(GroupTag.SYM, k, l, n)
    assert len(matrices) == bell_bounded(k + l, n)
    assert exact_rank(matrices) == len(matrices)


def test_rank_sym_11_n4():
    """Test identity and all-ones are independent"""
    assert spanning_rank(GroupTag.SYM, 1, 1, 4) == 2


def test_rank_orth():
    """Test the Brauer matrices are independent once n is large enough"""
    assert spanning_rank(GroupTag.ORTH, 2, 2, 3) == 3
    assert spanning_rank(GroupTag.ORTH, 2, 2, 1) == 1


def test_rank_spec_orth_is_reported():
    """Test the SO(2) spanning set has a computable rank"""
    matrices = spanning_set(GroupTag.SPEC_ORTH, 2, 2, 2)
    assert len(matrices) == 9
    assert 1 <= exact_rank(matrices) <= 9


def test_exact_rank_empty():
    """Test the empty family has rank zero"""
    assert exact_rank([]) == 0


def test_rank_cap():
    """Test the rank cap applies per matrix"""
    with pytest.raises(SizeLimitExceeded):
        spanning_rank(GroupTag.SYM, 3, 3, 7, cap=1000)
