# tests/test_operators.py
from fractions import Fraction

import numpy as np
import pytest

from diagram_engine.core.errors import ModeMismatch, ShapeMismatch
from diagram_engine.core.operators import DenseOperator, TensorVector, VectorMode
from diagram_engine.core.setpart import DiagramShape


def test_dense_operator_shape_check():
    """Test entries must be n^l x n^k"""
    with pytest.raises(ShapeMismatch):
        DenseOperator(DiagramShape(1, 2), 2, np.zeros((2, 2), dtype=np.int64))


def test_dense_operator_products():
    """Test matmul and Kronecker track shapes"""
    a = DenseOperator(DiagramShape(1, 1), 2, np.array([[1, 2], [3, 4]]))
    b = DenseOperator(DiagramShape(0, 1), 2, np.array([[1], [1]]))
    assert (a @ b).shape == DiagramShape(0, 1)
    assert np.array_equal((a @ b).entries, np.array([[3], [7]]))
    assert a.kron(b).shape == DiagramShape(1, 2)
    with pytest.raises(ShapeMismatch):
        b @ a


def test_tensor_vector_constructors():
    """Test exact, float and basis vectors"""
    v = TensorVector.exact(2, 1, ["1/3", 2])
    assert v.values.tolist() == [Fraction(1, 3), Fraction(2)]
    assert TensorVector.basis(3, 1, 2).values.tolist() == [0, 0, 1]
    assert TensorVector.basis(2, 1, 0, VectorMode.FLOAT).mode == VectorMode.FLOAT
    with pytest.raises(ShapeMismatch):
        TensorVector.floating(2, 2, [1.0, 2.0])


def test_max_deviation():
    """Test deviation is exact in exact mode and refuses mixed modes"""
    a = TensorVector.exact(2, 1, [1, "1/2"])
    b = TensorVector.exact(2, 1, [1, "1/3"])
    assert a.max_deviation(b) == Fraction(1, 6)
    with pytest.raises(ModeMismatch):
        a.max_deviation(TensorVector.floating(2, 1, [1.0, 0.5]))
    with pytest.raises(ShapeMismatch):
        a.max_deviation(TensorVector.exact(2, 2, [0, 0, 0, 0]))
