# groups.py - Representasi tensor power ρ_k, sampler elemen grup S_n, O(n), Sp(n), SO(n)
# dan pengecek residual equivariance ρ_l(g)·M - M·ρ_k(g)
import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm, qr

from ..core.errors import OddDimension, ShapeMismatch
from ..core.operators import DenseOperator, TensorVector
from ..core.utils import make_rng
from .functors import GroupTag, SymplecticIndexing

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """An n x n matrix of the group `group`; int64 for permutations, float64 otherwise."""

    group: GroupTag
    n: int
    matrix: np.ndarray

    @property
    def is_exact(self) -> bool:
        return self.matrix.dtype != np.float64

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if self.group != other.group or self.n != other.n:
            raise ShapeMismatch(
                f"cannot multiply elements of {self.group.value}({self.n}) and {other.group.value}({other.n})"
            )
        return GroupElement(self.group, self.n, self.matrix @ other.matrix)


def symplectic_form(n: int) -> np.ndarray:
    """J assembled from the ε table in the interleaved 1, 1', 2, 2', ... order."""
    return SymplecticIndexing.for_dimension(n).epsilon()


def _apply_along_axes(matrix: np.ndarray, block: np.ndarray, n: int, k: int) -> np.ndarray:
    """Apply `matrix` on each of the first k axes of an (n^k, B) block, never forming n^k x n^k."""
    batch = block.shape[1]
    tensor = block.reshape((n,) * k + (batch,))
    for axis in range(k):
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [axis])), 0, axis)
    return tensor.reshape(n**k, batch)


def rho_apply(g: GroupElement, k: int, v: TensorVector) -> TensorVector:
    """ρ_k(g) v: g acts on every tensor factor."""
    if v.order != k or v.n != g.n:
        raise ShapeMismatch(f"vector of order {v.order} over n={v.n} does not fit ρ_{k} at n={g.n}")
    values = v.values
    matrix = g.matrix.astype(object) if values.dtype == object else g.matrix
    result = _apply_along_axes(matrix, values.reshape(-1, 1), g.n, k)
    return TensorVector(v.n, k, result.reshape(-1), v.mode)


def _permutation(n: int, rng: np.random.Generator) -> np.ndarray:
    images = rng.permutation(n)
    matrix = np.zeros((n, n), dtype=np.int64)
    matrix[images, np.arange(n)] = 1  # g e_i = e_{images[i]}
    return matrix


def _orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    q, r = qr(rng.standard_normal((n, n)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1
    return q * signs


def _symplectic(n: int, rng: np.random.Generator) -> np.ndarray:
    J = symplectic_form(n).astype(np.float64)
    s = rng.standard_normal((n, n))
    hamiltonian = J @ ((s + s.T) / 2)  # AᵀJ + JA = 0 untuk A = J·S, S simetris
    hamiltonian /= max(1.0, np.linalg.norm(hamiltonian, 2))
    return expm(hamiltonian)


def sample(group: GroupTag, n: int, seed: int) -> GroupElement:
    """
    Deterministic group element for (group, n, seed).

    Raises:
        OddDimension: for the symplectic group at odd n
    """
    group = GroupTag(group)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = make_rng(seed)
    if group == GroupTag.SYM:
        matrix = _permutation(n, rng)
    elif group == GroupTag.ORTH:
        matrix = _orthogonal(n, rng)
    elif group == GroupTag.SPEC_ORTH:
        matrix = _orthogonal(n, rng)
        if np.linalg.det(matrix) < 0:
            matrix[:, 0] = -matrix[:, 0]
    else:
        if n % 2:
            raise OddDimension(n)
        matrix = _symplectic(n, rng)
    return GroupElement(group, n, matrix)


def membership_residual(g: GroupElement) -> float:
    """How far g is from satisfying its group's defining equations (max-norm)."""
    m = g.matrix.astype(np.float64)
    if g.group == GroupTag.SYMP:
        J = symplectic_form(g.n).astype(np.float64)
        return float(np.abs(m.T @ J @ m - J).max())
    residual = float(np.abs(m.T @ m - np.eye(g.n)).max())
    if g.group == GroupTag.SPEC_ORTH:
        residual = max(residual, abs(float(np.linalg.det(m)) - 1.0))
    return residual


def check_equivariance(g: GroupElement, M: DenseOperator):
    """
    ‖ρ_l(g)·M - M·ρ_k(g)‖_max.

    Both products are taken column block by column block through the tensor
    action; M·ρ_k(g) is computed as (ρ_k(gᵀ)·Mᵀ)ᵀ. Exact (integer) for
    permutation elements acting on integer matrices.
    """
    if g.n != M.n:
        raise ShapeMismatch(f"group element of dimension {g.n} against an operator at n={M.n}")
    n, k, l = M.n, M.shape.k, M.shape.l
    entries = M.entries
    if g.is_exact and entries.dtype != np.float64:
        matrix = g.matrix.astype(entries.dtype)
    else:
        matrix = g.matrix.astype(np.float64)
        entries = entries.astype(np.float64)
    left = _apply_along_axes(matrix, entries, n, l)
    right = _apply_along_axes(matrix.T, entries.T, n, k).T
    residual = np.abs(left - right).max() if left.size else 0
    logger.debug(f"equivariance residual for {g.group.value}({n}) on {M.shape}: {residual}")
    return residual
