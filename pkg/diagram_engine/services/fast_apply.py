# fast_apply.py - Faktorisasi diagram partisi: permutasi ∘ diagram planar ∘ permutasi,
# lalu aplikasi ke vektor tanpa membentuk matrix dense n^l x n^k
import logging
import time
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import BENCH_TRIALS, DEFAULT_SEED, DENSE_ENTRY_CAP
from ..core.errors import KindMismatch, ModeMismatch, ShapeMismatch
from ..core.operators import DenseOperator, TensorVector, VectorMode
from ..core.setpart import (
    Diagram,
    DiagramShape,
    enumerate_partition_diagrams,
    make_diagram,
    permutation_diagram,
)
from ..core.utils import make_rng
from .algebra import CategoryContext, ContextKind, DiagramSum, compose
from .functors import check_dense_cap, theta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxisPermutation:
    """Sends tensor axis i to axis images[i] (0-based)."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, r: int) -> "AxisPermutation":
        return cls(tuple(range(r)))

    @property
    def size(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.size))

    def inverse(self) -> "AxisPermutation":
        inverse = [0] * self.size
        for i, image in enumerate(self.images):
            inverse[image] = i
        return AxisPermutation(tuple(inverse))

    def apply_to_tuple(self, entries: Sequence) -> tuple:
        moved = [None] * self.size
        for i, image in enumerate(self.images):
            moved[image] = entries[i]
        return tuple(moved)

    def apply_to_index(self, index: int, n: int) -> int:
        """Action on mixed-radix encoded indices."""
        digits = []
        for _ in range(self.size):
            index, d = divmod(index, n)
            digits.append(d)
        moved = self.apply_to_tuple(digits[::-1])
        encoded = 0
        for d in moved:
            encoded = encoded * n + d
        return encoded

    def transpose_axes(self) -> Tuple[int, ...]:
        """`axes` argument for numpy.transpose that realizes this permutation."""
        return self.inverse().images

    def to_diagram(self) -> Diagram:
        return permutation_diagram(self.images)


@dataclass(frozen=True)
class SpiderBlock:
    """A single block with a bottom legs and b top legs."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValueError(f"spider needs a, b >= 0 and a + b >= 1, got ({self.a}, {self.b})")

    def to_diagram(self) -> Diagram:
        return make_diagram(DiagramShape(self.a, self.b), [range(1, self.a + self.b + 1)])


@dataclass(frozen=True)
class FactoredOperator:
    """
    Θ(source) = Θ(top_perm) · (spider_1 ⊗ ... ⊗ spider_t) · Θ(bottom_perm).

    bottom_perm sends original bottom positions to grouped positions and
    top_perm sends grouped top positions back to the original ones.
    """

    shape: DiagramShape
    n: int
    top_perm: AxisPermutation
    spiders: Tuple[SpiderBlock, ...]
    bottom_perm: AxisPermutation
    source: Optional[Diagram] = None

    def __post_init__(self):
        if sum(s.a for s in self.spiders) != self.shape.k or sum(s.b for s in self.spiders) != self.shape.l:
            raise ShapeMismatch(f"spider legs do not add up to shape {self.shape}")
        if self.top_perm.size != self.shape.l or self.bottom_perm.size != self.shape.k:
            raise ShapeMismatch(f"permutation sizes do not match shape {self.shape}")

    def planar_diagram(self) -> Diagram:
        """The middle factor: spider i owns the next a_i bottom and b_i top grouped positions."""
        l = self.shape.l
        blocks = []
        top = bottom = 0
        for s in self.spiders:
            block = [top + j + 1 for j in range(s.b)] + [l + bottom + j + 1 for j in range(s.a)]
            blocks.append(block)
            top += s.b
            bottom += s.a
        return make_diagram(self.shape, blocks)

    def recompose(self, ctx: Optional[CategoryContext] = None) -> DiagramSum:
        """top_perm ∘ planar ∘ bottom_perm as a diagram sum."""
        ctx = ctx or CategoryContext(self.n, ContextKind.PARTITION)
        middle = compose(ctx, self.planar_diagram(), self.bottom_perm.to_diagram())
        return compose(ctx, self.top_perm.to_diagram(), middle)

    @cached_property
    def plan(self) -> "_GatherScatterPlan":
        return _GatherScatterPlan.build(self)


def planarize(d: Diagram, n: int) -> FactoredOperator:
    """
    Factor a partition diagram through a planar diagram of spiders.

    Blocks are taken in canonical order (least vertex first); each block's
    top vertices and bottom vertices become contiguous runs.
    """
    if d.is_brauer_grood:
        raise KindMismatch("planarize takes partition diagrams, got an (l+k)\\n diagram")
    l, k = d.l, d.k
    spiders = []
    top_images = []  # grouped top position -> original top position
    bottom_images = [0] * k  # original bottom position -> grouped position
    grouped_bottom = 0
    for block in d.blocks:
        tops = [v - 1 for v in block if v <= l]
        bottoms = [v - l - 1 for v in block if v > l]
        top_images.extend(tops)
        for p in bottoms:
            bottom_images[p] = grouped_bottom
            grouped_bottom += 1
        spiders.append(SpiderBlock(len(bottoms), len(tops)))
    op = FactoredOperator(
        d.shape,
        n,
        AxisPermutation(tuple(top_images)),
        tuple(spiders),
        AxisPermutation(tuple(bottom_images)),
        d,
    )
    logger.debug(f"Planarized {d.blocks} into {len(spiders)} spiders")
    return op


def is_planar(d: Diagram) -> bool:
    """
    True iff every block occupies a contiguous run in each row and blocks that
    reach both rows appear in the same left-to-right order on top and bottom.
    """
    l = d.l
    through = []
    for block in d.blocks:
        tops = [v for v in block if v <= l]
        bottoms = [v for v in block if v > l]
        for run in (tops, bottoms):
            if run and run != list(range(run[0], run[0] + len(run))):
                return False
        if tops and bottoms:
            through.append((tops[0], bottoms[0]))
    bottom_starts = [b for _, b in sorted(through)]
    return bottom_starts == sorted(bottom_starts)


def spider_realize(n: int, s: SpiderBlock) -> DenseOperator:
    """All-equal delta, n^b x n^a."""
    return theta(n, s.to_diagram())


# ---------------------------------------------------------------------------
# Jalur cepat: satu gather (baca fiber diagonal + reduksi) dan satu scatter
# (tulis ke diagonal), indeks sudah termasuk kedua permutasi
# ---------------------------------------------------------------------------


def _flat_offsets(weights: Sequence[int], n: int) -> np.ndarray:
    """Σ_s value_s * weights[s] over all value assignments, first weight most significant."""
    offsets = np.zeros(1, dtype=np.int64)
    steps = np.arange(n, dtype=np.int64)
    for w in weights:
        offsets = (offsets[:, None] + steps[None, :] * w).ravel()
    return offsets


@dataclass(frozen=True)
class _GatherScatterPlan:
    gather: np.ndarray  # (n^t, n^r) input indices, summed along axis 1
    scatter: np.ndarray  # (n^t, n^u) output indices, each row receives one value
    out_size: int
    direct: Optional[np.ndarray] = None  # (n^l, n^r) or (n^l,) read indices when scatter covers every output once

    @classmethod
    def build(cls, op: FactoredOperator) -> "_GatherScatterPlan":
        n, k, l = op.n, op.shape.k, op.shape.l
        from_grouped_bottom = op.bottom_perm.inverse().images
        through, reduced, spawned = [], [], []  # (input weight, output weight) per spider
        top = bottom = 0
        for s in op.spiders:
            # bobot flat index: jumlah n^posisi untuk semua kaki spider di vektor asli
            w_in = sum(n ** (k - 1 - from_grouped_bottom[g]) for g in range(bottom, bottom + s.a))
            w_out = sum(n ** (l - 1 - op.top_perm.images[g]) for g in range(top, top + s.b))
            if s.a and s.b:
                through.append((w_in, w_out))  # baca diagonal, tulis diagonal
            elif s.a:
                reduced.append(w_in)  # baca diagonal lalu dijumlah
            else:
                spawned.append(w_out)  # nilai disalin ke seluruh diagonal output
            top += s.b
            bottom += s.a
        gather = _flat_offsets([w for w, _ in through], n)[:, None] + _flat_offsets(reduced, n)[None, :]
        scatter = _flat_offsets([w for _, w in through], n)[:, None] + _flat_offsets(spawned, n)[None, :]
        direct = None
        if scatter.size == n**l:
            # scatter injektif dan menutup semua output: balik jadi tabel baca per output
            source = np.empty(n**l, dtype=np.intp)
            source[scatter.ravel()] = np.repeat(np.arange(scatter.shape[0]), scatter.shape[1])
            direct = np.ascontiguousarray(gather[source].astype(np.intp))
            if direct.shape[1] == 1:  # tanpa reduksi: cukup satu take
                direct = direct[:, 0]
        return cls(gather.astype(np.intp), scatter.astype(np.intp), n**l, direct)

    def run(self, values: np.ndarray) -> np.ndarray:
        """values is (n^k,) or a (n^k, B) batch of column vectors."""
        if self.direct is not None:
            taken = np.take(values, self.direct, axis=0)
            return taken if self.direct.ndim == 1 else np.add.reduce(taken, axis=1)
        collected = np.add.reduce(np.take(values, self.gather, axis=0), axis=1)
        out = np.zeros((self.out_size,) + values.shape[1:], dtype=values.dtype)
        out[self.scatter] = collected[:, None]
        return out


def _check_vector(op: FactoredOperator, v: TensorVector) -> None:
    if v.n != op.n or v.order != op.shape.k:
        raise ShapeMismatch(
            f"vector of order {v.order} over n={v.n} does not fit operator {op.shape} at n={op.n}"
        )


def apply_fast(op: FactoredOperator, v: TensorVector) -> TensorVector:
    """Apply Θ(op.source) to v through the precomputed gather/scatter plan."""
    _check_vector(op, v)
    return TensorVector(op.n, op.shape.l, op.plan.run(v.values), v.mode)


def apply_fast_batch(op: FactoredOperator, values: np.ndarray) -> np.ndarray:
    """apply_fast on the columns of an (n^k, B) array."""
    if values.ndim != 2 or values.shape[0] != op.n**op.shape.k:
        raise ShapeMismatch(f"batch of shape {values.shape} does not fit operator {op.shape} at n={op.n}")
    return op.plan.run(values)


def apply_staged(op: FactoredOperator, v: TensorVector) -> TensorVector:
    """
    Apply the factorization one spider at a time, right to left.

    The intermediate tensor keeps remaining input axes in front and finished
    output axes behind them, all in grouped order.
    """
    _check_vector(op, v)
    n, k = op.n, op.shape.k
    tensor = np.transpose(v.values.reshape((n,) * k), op.bottom_perm.transpose_axes())
    diagonal = np.arange(n)
    remaining = k
    for s in reversed(op.spiders):
        lead = remaining - s.a
        if s.a:
            tensor = np.moveaxis(tensor, list(range(lead, remaining)), list(range(tensor.ndim - s.a, tensor.ndim)))
            fiber = tensor[(Ellipsis,) + (diagonal,) * s.a]
        else:
            fiber = np.broadcast_to(tensor[..., None], tensor.shape + (n,))
        if s.b == 0:
            # reduksi sumbu terakhir bisa jadi skalar (Fraction atau float), tetap simpan sebagai array
            result = np.asarray(fiber.sum(axis=-1), dtype=fiber.dtype)
        elif s.b == 1:
            result = fiber
        else:
            result = np.zeros(fiber.shape[:-1] + (n,) * s.b, dtype=fiber.dtype)
            result[(Ellipsis,) + (diagonal,) * s.b] = fiber
        if s.b:
            outputs = list(range(result.ndim - s.b, result.ndim))
            result = np.moveaxis(result, outputs, list(range(lead, lead + s.b)))
        tensor = result
        remaining = lead
    tensor = np.transpose(tensor, op.top_perm.transpose_axes())
    return TensorVector(op.n, op.shape.l, np.ascontiguousarray(tensor).reshape(-1), v.mode)


def apply_dense(M: DenseOperator, v: TensorVector) -> TensorVector:
    if v.n != M.n or v.order != M.shape.k:
        raise ShapeMismatch(f"vector of length {len(v.values)} does not fit a {M.rows}x{M.cols} matrix")
    if v.mode == VectorMode.FLOAT and M.entries.dtype == object:
        raise ModeMismatch("rational matrix applied to a floating vector")
    entries = M.entries.astype(object) if v.mode == VectorMode.EXACT else M.entries
    return TensorVector(M.n, M.shape.l, entries @ v.values, v.mode)


def random_vector(n: int, order: int, rng: np.random.Generator, mode: VectorMode) -> TensorVector:
    """Seeded test vector: small-denominator rationals in exact mode, Gaussians otherwise."""
    size = n**order
    if mode == VectorMode.EXACT:
        numerators = rng.integers(-9, 10, size=size)
        denominators = rng.integers(1, 6, size=size)
        return TensorVector.exact(n, order, (f"{p}/{q}" for p, q in zip(numerators, denominators)))
    return TensorVector.floating(n, order, rng.standard_normal(size))


def random_diagram(shape: DiagramShape, rng: np.random.Generator) -> Diagram:
    diagrams = enumerate_partition_diagrams(shape)
    return diagrams[int(rng.integers(len(diagrams)))]


@dataclass(frozen=True)
class BenchReport:
    shape: DiagramShape
    n: int
    dense_ms: float
    fast_ms: float
    max_dev: float

    @property
    def speedup(self) -> float:
        return self.dense_ms / self.fast_ms if self.fast_ms else float("inf")

    def as_row(self) -> dict:
        return {
            "shape": f"({self.shape.k},{self.shape.l})",
            "n": self.n,
            "dense_ms": self.dense_ms,
            "fast_ms": self.fast_ms,
            "speedup": self.speedup,
            "max_dev": self.max_dev,
        }


def _median_ms(fn, inputs: List[TensorVector]) -> Tuple[float, List[TensorVector]]:
    timings, outputs = [], []
    for v in inputs:
        start = time.perf_counter()
        outputs.append(fn(v))
        timings.append(time.perf_counter() - start)
    return float(np.median(timings)) * 1e3, outputs


def bench(
    shape: DiagramShape,
    n: int,
    trials: int = BENCH_TRIALS,
    seed: int = DEFAULT_SEED,
    cap: int = DENSE_ENTRY_CAP,
    diagram: Optional[Diagram] = None,
) -> BenchReport:
    """
    Time dense Θ·v against the factored path on seeded float vectors.

    Raises:
        SizeLimitExceeded: if the dense matrix would exceed `cap` entries
    """
    check_dense_cap(n, shape, cap, "bench")
    rng = make_rng(seed)
    d = diagram if diagram is not None else random_diagram(shape, rng)
    dense = theta(n, d)
    dense = DenseOperator(dense.shape, n, dense.entries.astype(np.float64), dense.functor)
    op = planarize(d, n)
    _ = op.plan
    inputs = [random_vector(n, shape.k, rng, VectorMode.FLOAT) for _ in range(trials)]
    dense_ms, dense_out = _median_ms(lambda v: apply_dense(dense, v), inputs)
    fast_ms, fast_out = _median_ms(lambda v: apply_fast(op, v), inputs)
    deviation = max(a.max_deviation(b) for a, b in zip(dense_out, fast_out)) if inputs else 0.0
    report = BenchReport(shape, n, dense_ms, fast_ms, float(deviation))
    logger.info(f"bench {shape} n={n}: dense={dense_ms:.4f}ms fast={fast_ms:.4f}ms dev={deviation:.3g}")
    return report


def bench_table(reports: Sequence[BenchReport]) -> pd.DataFrame:
    columns = ["shape", "n", "dense_ms", "fast_ms", "speedup", "max_dev"]
    return pd.DataFrame([r.as_row() for r in reports], columns=columns)
