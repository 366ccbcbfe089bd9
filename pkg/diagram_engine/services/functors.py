# functors.py - Functor Θ (S_n), Φ (O(n)), X (Sp(n)), Ψ (SO(n)): diagram -> matrix dense exact
# Baris matrix diindeks oleh tuple atas (i_1..i_l), kolom oleh tuple bawah (j_1..j_k)
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..config import DENSE_ENTRY_CAP, RANK_ENTRY_CAP
from ..core.errors import KindMismatch, NotBrauer, OddDimension, SizeLimitExceeded
from ..core.operators import DenseOperator
from ..core.setpart import (
    Diagram,
    DiagramShape,
    enumerate_bg,
    enumerate_brauer,
    enumerate_partition_diagrams_bounded,
)
from ..core.utils import index_digits
from .algebra import CategoryContext, ContextKind, SumLike, as_sum

logger = logging.getLogger(__name__)


class FunctorName(str, Enum):
    THETA = "theta"
    PHI = "phi"
    X_SP = "x_sp"
    PSI = "psi"


class GroupTag(str, Enum):
    SYM = "sym"
    ORTH = "orth"
    SYMP = "symp"
    SPEC_ORTH = "spec_orth"


DEFAULT_FUNCTORS: Dict[ContextKind, FunctorName] = {
    ContextKind.PARTITION: FunctorName.THETA,
    ContextKind.BRAUER: FunctorName.PHI,
    ContextKind.SYMPLECTIC: FunctorName.X_SP,
    ContextKind.BRAUER_GROOD: FunctorName.PSI,
}


@dataclass(frozen=True)
class SymplecticIndexing:
    """Positions 0..n-1 carry the labels 1, 1', 2, 2', ..., m, m'."""

    m: int

    @classmethod
    def for_dimension(cls, n: int) -> "SymplecticIndexing":
        if n < 2 or n % 2:
            raise OddDimension(n)
        return cls(n // 2)

    @property
    def n(self) -> int:
        return 2 * self.m

    def label(self, position: int) -> str:
        a, primed = divmod(position, 2)
        return f"{a + 1}'" if primed else str(a + 1)

    def epsilon(self) -> np.ndarray:
        """ε table: ε(a, a') = 1, ε(a', a) = -1, zero elsewhere."""
        table = np.zeros((self.n, self.n), dtype=np.int64)
        for a in range(self.m):
            table[2 * a, 2 * a + 1] = 1
            table[2 * a + 1, 2 * a] = -1
        return table


def check_dense_cap(n: int, shape: DiagramShape, cap: int, what: str) -> None:
    entries = n ** (shape.k + shape.l)
    if entries > cap:
        raise SizeLimitExceeded(entries, cap, what)


def _vertex_values(n: int, shape: DiagramShape) -> Callable[[int], np.ndarray]:
    """Index value at each vertex, broadcastable over the (n^l, n^k) matrix grid."""
    rows = index_digits(n, shape.l)
    cols = index_digits(n, shape.k)

    def value(v: int) -> np.ndarray:
        if v <= shape.l:
            return rows[:, v - 1][:, None]
        return cols[:, v - shape.l - 1][None, :]

    return value


def _block_deltas(n: int, shape: DiagramShape, blocks: Sequence[Sequence[int]], value) -> np.ndarray:
    mask = np.ones((n**shape.l, n**shape.k), dtype=bool)
    for block in blocks:
        ref = value(block[0])
        for v in block[1:]:
            mask &= value(v) == ref
    return mask.astype(np.int64)


def theta(n: int, d: Diagram, cap: int = DENSE_ENTRY_CAP) -> DenseOperator:
    """
    E_π: entry (I, J) is 1 iff the index assignment is constant on every block.

    Args:
        n: Dimension of the permutation representation
        d: General or Brauer diagram of shape (k, l)

    Returns:
        DenseOperator with n^l rows and n^k columns
    """
    if d.is_brauer_grood:
        raise KindMismatch(f"theta takes partition diagrams, got an (l+k)\\{d.n} diagram")
    check_dense_cap(n, d.shape, cap, "theta")
    entries = _block_deltas(n, d.shape, d.blocks, _vertex_values(n, d.shape))
    return DenseOperator(d.shape, n, entries, FunctorName.THETA.value)


def phi(n: int, d: Diagram, cap: int = DENSE_ENTRY_CAP) -> DenseOperator:
    if not d.is_brauer:
        raise NotBrauer(f"phi takes Brauer diagrams, got blocks {d.blocks}")
    check_dense_cap(n, d.shape, cap, "phi")
    entries = _block_deltas(n, d.shape, d.blocks, _vertex_values(n, d.shape))
    return DenseOperator(d.shape, n, entries, FunctorName.PHI.value)


def x_sp(n: int, d: Diagram, cap: int = DENSE_ENTRY_CAP) -> DenseOperator:
    """F_β in the symplectic basis: δ on cross-row pairs, ε on same-row pairs (left vertex first)."""
    eps = SymplecticIndexing.for_dimension(n).epsilon()
    if not d.is_brauer:
        raise NotBrauer(f"x_sp takes Brauer diagrams, got blocks {d.blocks}")
    check_dense_cap(n, d.shape, cap, "x_sp")
    value = _vertex_values(n, d.shape)
    entries = np.ones((n**d.l, n**d.k), dtype=np.int64)
    for u, v in d.blocks:
        if d.shape.is_top(u) == d.shape.is_top(v):
            entries = entries * eps[value(u), value(v)]
        else:
            entries = entries * (value(u) == value(v))
    return DenseOperator(d.shape, n, entries, FunctorName.X_SP.value)


def psi(n: int, d: Diagram, cap: int = DENSE_ENTRY_CAP) -> DenseOperator:
    """
    H_α for (l+k)\\n diagrams, E_β for Brauer diagrams.

    The free vertices, read in label order, must carry distinct indices; the
    entry is then the sign of that tuple as a permutation of [n] (the product
    of sign(x_q - x_p) over p < q), times a δ for every paired block.
    """
    if d.is_brauer:
        return DenseOperator(d.shape, n, phi(n, d, cap).entries, FunctorName.PSI.value)
    if not d.is_brauer_grood or d.n != n:
        tag = f"(l+k)\\{d.n}" if d.is_brauer_grood else d.kind.value
        raise KindMismatch(f"psi at n={n} takes Brauer or (l+k)\\{n} diagrams, got a {tag} diagram")
    check_dense_cap(n, d.shape, cap, "psi")
    value = _vertex_values(n, d.shape)
    entries = _block_deltas(n, d.shape, d.paired_blocks(), value)
    free = [value(v) for v in d.free_vertices()]
    for q in range(len(free)):
        for p in range(q):
            entries = entries * np.sign(free[q] - free[p])
    return DenseOperator(d.shape, n, entries, FunctorName.PSI.value)


_PER_DIAGRAM = {
    FunctorName.THETA: theta,
    FunctorName.PHI: phi,
    FunctorName.X_SP: x_sp,
    FunctorName.PSI: psi,
}


def realize_diagram(functor: FunctorName, n: int, d: Diagram, cap: int = DENSE_ENTRY_CAP) -> DenseOperator:
    return _PER_DIAGRAM[FunctorName(functor)](n, d, cap)


def realize(
    ctx: CategoryContext,
    s: SumLike,
    functor: Optional[FunctorName] = None,
    cap: int = DENSE_ENTRY_CAP,
) -> DenseOperator:
    """Σ coefficient × per-diagram matrix; int64 when every coefficient is integral."""
    s = as_sum(s)
    functor = FunctorName(functor) if functor is not None else DEFAULT_FUNCTORS[ctx.kind]
    n = ctx.n
    check_dense_cap(n, s.shape, cap, functor.value)
    integral = all(c.denominator == 1 for c in s.terms.values())
    total = np.zeros((n**s.shape.l, n**s.shape.k), dtype=np.int64 if integral else object)
    for d, c in s.items():
        entries = realize_diagram(functor, n, d, cap).entries
        if integral:
            total = total + int(c) * entries
        else:
            total = total + c * entries.astype(object)
    return DenseOperator(s.shape, n, total, functor.value)


def spanning_set(group: GroupTag, k: int, l: int, n: int, cap: int = DENSE_ENTRY_CAP) -> List[DenseOperator]:
    """Realized matrices of the diagram family that spans Hom_G((R^n)^⊗k, (R^n)^⊗l)."""
    group = GroupTag(group)
    shape = DiagramShape(k, l)
    if group == GroupTag.SYM:
        return [theta(n, d, cap) for d in enumerate_partition_diagrams_bounded(shape, n)]
    if group == GroupTag.ORTH:
        return [phi(n, d, cap) for d in enumerate_brauer(shape)]
    if group == GroupTag.SYMP:
        return [x_sp(n, d, cap) for d in enumerate_brauer(shape)]
    brauer = [psi(n, d, cap) for d in enumerate_brauer(shape)]
    return brauer + [psi(n, d, cap) for d in enumerate_bg(shape, n)]


def _to_qq(x):
    f = Fraction(x)
    return QQ(f.numerator, f.denominator)


def exact_rank(operators: Sequence[DenseOperator]) -> int:
    """Rank over the rationals of the flattened matrices."""
    if not operators:
        return 0
    rows = [[_to_qq(x) for x in op.entries.ravel().tolist()] for op in operators]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ).rank()


def spanning_rank(group: GroupTag, k: int, l: int, n: int, cap: int = RANK_ENTRY_CAP) -> int:
    """
    Rank of the realized spanning set.

    Raises:
        SizeLimitExceeded: if a single matrix has more than `cap` entries
    """
    check_dense_cap(n, DiagramShape(k, l), cap, "spanning_rank")
    matrices = spanning_set(group, k, l, n)
    rank = exact_rank(matrices)
    logger.info(f"spanning_rank group={GroupTag(group).value} k={k} l={l} n={n}: {rank} of {len(matrices)}")
    return rank
