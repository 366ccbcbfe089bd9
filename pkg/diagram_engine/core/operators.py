# operators.py - Nilai matrix dense dan vektor tensor (mode exact / float)
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ModeMismatch, ShapeMismatch
from .setpart import DiagramShape


class VectorMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """
    An n^l x n^k matrix in the standard (or symplectic) basis.

    Entries are int64 for single diagrams and object (Fraction) arrays when a
    sum carries non-integral coefficients.
    """

    shape: DiagramShape
    n: int
    entries: np.ndarray
    functor: str = "theta"

    def __post_init__(self):
        expected = (self.n**self.shape.l, self.n**self.shape.k)
        if self.entries.shape != expected:
            raise ShapeMismatch(f"entries have shape {self.entries.shape}, expected {expected}")

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseOperator):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.n == other.n
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        if self.n != other.n or self.shape.k != other.shape.l:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        shape = DiagramShape(other.shape.k, self.shape.l)
        return DenseOperator(shape, self.n, self.entries @ other.entries, self.functor)

    def kron(self, other: "DenseOperator") -> "DenseOperator":
        if self.n != other.n:
            raise ShapeMismatch(f"cannot take Kronecker product at n={self.n} and n={other.n}")
        shape = DiagramShape(self.shape.k + other.shape.k, self.shape.l + other.shape.l)
        return DenseOperator(shape, self.n, np.kron(self.entries, other.entries), self.functor)


@dataclass(frozen=True, eq=False)
class TensorVector:
    """Coordinates of an order-r tensor over R^n, in mixed-radix index order."""

    n: int
    order: int
    values: np.ndarray
    mode: VectorMode = VectorMode.FLOAT

    def __post_init__(self):
        if self.values.ndim != 1 or len(self.values) != self.n**self.order:
            raise ShapeMismatch(
                f"vector has {self.values.size} values, expected n^order = {self.n**self.order}"
            )

    @classmethod
    def exact(cls, n: int, order: int, values: Iterable) -> "TensorVector":
        array = np.array([Fraction(v) for v in values], dtype=object)
        return cls(n, order, array.reshape(-1), VectorMode.EXACT)

    @classmethod
    def floating(cls, n: int, order: int, values: Sequence[float]) -> "TensorVector":
        return cls(n, order, np.asarray(values, dtype=np.float64).reshape(-1), VectorMode.FLOAT)

    @classmethod
    def basis(cls, n: int, order: int, index: int, mode: VectorMode = VectorMode.EXACT) -> "TensorVector":
        size = n**order
        values = [0] * size
        values[index] = 1
        return cls.exact(n, order, values) if mode == VectorMode.EXACT else cls.floating(n, order, values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (
            self.n == other.n
            and self.order == other.order
            and self.mode == other.mode
            and bool(np.array_equal(self.values, other.values))
        )

    def max_deviation(self, other: "TensorVector"):
        """Max-norm distance; exact in exact mode."""
        if self.n != other.n or self.order != other.order:
            raise ShapeMismatch(
                f"cannot compare order-{self.order} and order-{other.order} vectors over n={self.n}, n={other.n}"
            )
        if self.mode != other.mode:
            raise ModeMismatch(f"cannot compare {self.mode.value} and {other.mode.value} vectors")
        return max(abs(a - b) for a, b in zip(self.values.tolist(), other.values.tolist()))

