# tests/test_storage.py
from fractions import Fraction

import numpy as np
import pytest

from diagram_engine.core.errors import NotationError, ShapeMismatch
from diagram_engine.core.notation import parse_diagram
from diagram_engine.core.operators import DenseOperator, TensorVector, VectorMode
from diagram_engine.core.setpart import DiagramShape
from diagram_engine.core.storage import format_matrix, format_vector, parse_matrix, parse_vector
from diagram_engine.services.functors import theta, x_sp


def test_format_matrix_dense():
    """Test the header line and dense rows"""
    text = format_matrix(theta(2, parse_diagram("P[1->1]: {1,2}")))
    assert text == "# functor=theta n=2 k=1 l=1 rows=2 cols=2\n1 0\n0 1\n"


def test_format_matrix_sparse():
    """Test sparse triplets list only nonzero entries"""
    M = x_sp(2, parse_diagram("P[2->0]: {1,2}"))
    assert format_matrix(M, "sparse") == "# functor=x_sp n=2 k=2 l=0 rows=1 cols=4\n0 1 1\n0 2 -1\n"


def test_matrix_reparses_exactly():
    """Test emitted matrices parse back bit-exactly in both layouts"""
    M = x_sp(2, parse_diagram("P[2->2]: {1,2}/{3,4}"))
    for fmt in ("dense", "sparse"):
        parsed = parse_matrix(format_matrix(M, fmt), fmt)
        assert parsed == M
        assert parsed.functor == "x_sp"
    assert parse_matrix(format_matrix(M, "dense")) == M


def test_rational_matrix_round_trip():
    """Test rational entries are written as p/q"""
    entries = np.array([[Fraction(1, 2), Fraction(0)], [Fraction(3), Fraction(-2, 3)]], dtype=object)
    M = DenseOperator(DiagramShape(1, 1), 2, entries)
    text = format_matrix(M)
    assert "1/2 0" in text and "3 -2/3" in text
    assert parse_matrix(text) == M


def test_parse_matrix_errors():
    """Test malformed matrix files are rejected"""
    with pytest.raises(NotationError):
        parse_matrix("1 0\n0 1\n")
    with pytest.raises(ShapeMismatch):
        parse_matrix("# functor=theta n=2 k=1 l=1 rows=3 cols=2\n")
    with pytest.raises(NotationError):
        parse_matrix("# functor=theta n=2 k=1 l=1 rows=2 cols=2\n1 x\n0 1\n")
    with pytest.raises(NotationError):
        parse_matrix("# functor=theta n=2 k=1 l=1 rows=2 cols=2\n5 0 1\n", "sparse")


def test_vector_exact_round_trip():
    """Test exact vectors keep their rationals"""
    v = TensorVector.exact(2, 2, ["1/2", 0, -3, "7/5"])
    text = format_vector(v)
    assert text == "# n=2 order=2 mode=exact\n1/2\n0\n-3\n7/5\n"
    assert parse_vector(text) == v


def test_vector_float_round_trip():
    """Test float vectors re-parse bit-exactly"""
    v = TensorVector.floating(3, 1, [0.1, -2.5e-17, 1 / 3])
    parsed = parse_vector(format_vector(v))
    assert parsed.mode == VectorMode.FLOAT
    assert np.array_equal(parsed.values, v.values)


def test_parse_vector_errors():
    """Test bad headers and wrong lengths"""
    with pytest.raises(ShapeMismatch):
        parse_vector("# n=2 order=2 mode=exact\n1\n2\n")
    with pytest.raises(NotationError):
        parse_vector("# n=2 order=1 mode=complex\n1\n2\n")
    with pytest.raises(NotationError):
        parse_vector("# n=2 mode=exact\n1\n2\n")
