# tests/test_utils.py
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagram_engine.core.union_find import UnionFind
from diagram_engine.core.utils import (
    decode_index,
    encode_index,
    index_digits,
    make_rng,
    permutation_sign,
)


def test_encode_index_leftmost_most_significant():
    """Test mixed-radix encoding puts the first entry in the highest digit"""
    assert encode_index((1, 0), 2) == 2
    assert encode_index((0, 1), 2) == 1
    assert encode_index((2, 1, 0), 3) == 21
    assert encode_index((), 5) == 0


def test_encode_index_rejects_out_of_range():
    """Test entries outside 0..n-1 are rejected"""
    with pytest.raises(ValueError):
        encode_index((0, 3), 3)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=4), st.data())
def test_decode_inverts_encode(n, r, data):
    """Test decode_index is the inverse of encode_index"""
    index = data.draw(st.integers(min_value=0, max_value=n**r - 1))
    assert encode_index(decode_index(index, n, r), n) == index


def test_index_digits_rows_match_decode():
    """Test index_digits lists tuples in encoded order"""
    digits = index_digits(3, 2)
    assert digits.shape == (9, 2)
    for i, row in enumerate(digits):
        assert tuple(row) == decode_index(i, 3, 2)


def test_index_digits_order_zero():
    """Test the empty tuple gives a single row with no columns"""
    assert index_digits(4, 0).shape == (1, 0)


def test_permutation_sign():
    """Test permutation sign for identity, transposition and 3-cycle"""
    assert permutation_sign([1, 2, 3]) == 1
    assert permutation_sign([2, 1, 3]) == -1
    assert permutation_sign([2, 3, 1]) == 1
    assert permutation_sign([]) == 1
    assert permutation_sign([(1, 5), (0, 2)]) == -1


def test_permutation_sign_rejects_duplicates():
    """Test duplicate items raise"""
    with pytest.raises(ValueError):
        permutation_sign([1, 1, 2])


def test_make_rng_is_deterministic():
    """Test the same seed gives the same stream"""
    a = make_rng(7).integers(0, 1000, size=5)
    b = make_rng(7).integers(0, 1000, size=5)
    assert np.array_equal(a, b)


def test_union_find_groups():
    """Test union-find components keep input order"""
    uf = UnionFind()
    uf.union(1, 4)
    uf.union_all([2, 5, 6])
    assert uf.groups(range(1, 7)) == [[1, 4], [2, 5, 6], [3]]
    assert uf.find(6) == uf.find(2)
    assert uf.find(3) != uf.find(1)
