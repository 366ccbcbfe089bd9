# setpart.py - Representasi, validasi, kanonisasi dan enumerasi diagram partisi
# Label vertex: baris atas 1..l, baris bawah l+1..l+k (kiri ke kanan)
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..config import ENUMERATION_CACHE_SIZE
from .errors import (
    EmptyBlock,
    NotBrauerGrood,
    OverlappingBlocks,
    ShapeMismatch,
    UncoveredVertex,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class DiagramShape:
    """(k, l): k bottom vertices, l top vertices."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ShapeMismatch(f"shape arities must be non-negative, got ({self.k},{self.l})")

    @property
    def size(self) -> int:
        return self.l + self.k

    def is_top(self, vertex: int) -> bool:
        return vertex <= self.l

    def __str__(self) -> str:
        return f"({self.k},{self.l})"


@dataclass(frozen=True)
class SetPartition:
    """Blocks in canonical form: ascending inside, ordered by least element."""

    blocks: Tuple[Block, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], size: int) -> "SetPartition":
        owner = {}
        cleaned: List[Block] = []
        for index, block in enumerate(blocks):
            members = tuple(block)
            if not members:
                raise EmptyBlock(index)
            for v in members:
                if not 1 <= v <= size:
                    raise VertexOutOfRange(v, size)
                if v in owner:
                    raise OverlappingBlocks(v, owner[v], members)
                owner[v] = members
            cleaned.append(members)
        for v in range(1, size + 1):
            if v not in owner:
                raise UncoveredVertex(v)
        return cls(tuple(cleaned)).canonical()

    @classmethod
    def from_restricted_growth(cls, rgs: Sequence[int]) -> "SetPartition":
        grouped: List[List[int]] = []
        for position, label in enumerate(rgs, start=1):
            if label == len(grouped):
                grouped.append([])
            grouped[label].append(position)
        return cls(tuple(tuple(b) for b in grouped))

    def canonical(self) -> "SetPartition":
        return SetPartition(tuple(sorted(tuple(sorted(b)) for b in self.blocks)))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def restricted_growth(self) -> Tuple[int, ...]:
        labels = [0] * self.size
        for index, block in enumerate(self.blocks):
            for v in block:
                labels[v - 1] = index
        return tuple(labels)


class DiagramKind(str, Enum):
    GENERAL = "general"
    BRAUER = "brauer"
    BRAUER_GROOD = "brauer_grood"


@dataclass(frozen=True)
class Diagram:
    """
    A (k,l)-partition diagram.

    `n` is set only for BrauerGrood diagrams (the (l+k)\\n family) and is part
    of equality, so a retagged diagram is a different morphism from its
    untagged twin.
    """

    shape: DiagramShape
    partition: SetPartition
    kind: DiagramKind = DiagramKind.GENERAL
    n: Optional[int] = None

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return self.partition.blocks

    @property
    def k(self) -> int:
        return self.shape.k

    @property
    def l(self) -> int:
        return self.shape.l

    @property
    def is_brauer(self) -> bool:
        return self.kind == DiagramKind.BRAUER

    @property
    def is_brauer_grood(self) -> bool:
        return self.kind == DiagramKind.BRAUER_GROOD

    def free_vertices(self) -> Tuple[int, ...]:
        """Singleton vertices in ascending label order (the jellyfish legs)."""
        return tuple(b[0] for b in self.blocks if len(b) == 1)

    def paired_blocks(self) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if len(b) == 2)

    def transpose(self) -> "Diagram":
        """Flip the diagram upside down: shape (k,l) becomes (l,k)."""
        k, l = self.shape.k, self.shape.l

        def flip(v: int) -> int:
            return k + v if v <= l else v - l

        partition = SetPartition(tuple(tuple(flip(v) for v in b) for b in self.blocks)).canonical()
        return Diagram(DiagramShape(l, k), partition, self.kind, self.n)


def _classify(blocks: Sequence[Block]) -> DiagramKind:
    # diagram kosong (0,0) ikut terhitung sebagai Brauer (matching kosong)
    if all(len(b) == 2 for b in blocks):
        return DiagramKind.BRAUER
    return DiagramKind.GENERAL


def make_diagram(shape: DiagramShape, blocks: Iterable[Iterable[int]]) -> Diagram:
    """
    Build a canonical diagram from an explicit block list.

    Raises:
        OverlappingBlocks, UncoveredVertex, EmptyBlock, VertexOutOfRange
    """
    partition = SetPartition.from_blocks(blocks, shape.size)
    return Diagram(shape, partition, _classify(partition.blocks))


def classify_bg(d: Diagram, n: int) -> Diagram:
    """Retag `d` as an (l+k)\\n diagram; it must have exactly n singletons and pairs elsewhere."""
    if n < 1:
        raise NotBrauerGrood(f"n must be positive, got {n}")
    oversized = [b for b in d.blocks if len(b) > 2]
    if oversized:
        raise NotBrauerGrood(f"block {list(oversized[0])} has size {len(oversized[0])} > 2")
    singles = len(d.free_vertices())
    if singles != n:
        raise NotBrauerGrood(f"diagram has {singles} singleton blocks, expected {n}")
    return Diagram(d.shape, d.partition, DiagramKind.BRAUER_GROOD, n)


def identity_diagram(k: int) -> Diagram:
    """The (k,k) diagram joining top vertex i to bottom vertex k+i."""
    return make_diagram(DiagramShape(k, k), [(i, k + i) for i in range(1, k + 1)])


def permutation_diagram(images: Sequence[int]) -> Diagram:
    """
    The (r,r) Brauer diagram that sends bottom position i to top position images[i].

    Positions are 0-based; under the matrix functors this is the operator that
    moves tensor axis i to axis images[i].
    """
    r = len(images)
    if sorted(images) != list(range(r)):
        raise ValueError(f"{list(images)} is not a permutation of 0..{r - 1}")
    return make_diagram(DiagramShape(r, r), [(images[i] + 1, r + i + 1) for i in range(r)])


def _restricted_growth_strings(
    m: int, max_blocks: Optional[int] = None, max_block_size: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length m in lexicographic order, with pruning."""
    if m == 0:
        yield ()
        return
    labels = [0] * m
    sizes: List[int] = []

    def extend(position: int) -> Iterator[Tuple[int, ...]]:
        if position == m:
            yield tuple(labels)
            return
        opened = len(sizes)
        limit = opened + 1 if max_blocks is None else min(opened + 1, max_blocks)
        for label in range(limit):
            if label < opened:
                if max_block_size is not None and sizes[label] >= max_block_size:
                    continue
                sizes[label] += 1
                labels[position] = label
                yield from extend(position + 1)
                sizes[label] -= 1
            else:
                sizes.append(1)
                labels[position] = label
                yield from extend(position + 1)
                sizes.pop()

    yield from extend(0)


def _from_rgs(shape: DiagramShape, rgs: Tuple[int, ...]) -> Diagram:
    partition = SetPartition.from_restricted_growth(rgs)
    return Diagram(shape, partition, _classify(partition.blocks))


@lru_cache(maxsize=ENUMERATION_CACHE_SIZE)
def enumerate_partition_diagrams(shape: DiagramShape) -> Tuple[Diagram, ...]:
    diagrams = tuple(_from_rgs(shape, rgs) for rgs in _restricted_growth_strings(shape.size))
    logger.debug(f"Enumerated {len(diagrams)} partition diagrams of shape {shape}")
    return diagrams


@lru_cache(maxsize=ENUMERATION_CACHE_SIZE)
def enumerate_partition_diagrams_bounded(shape: DiagramShape, n: int) -> Tuple[Diagram, ...]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return tuple(
        _from_rgs(shape, rgs) for rgs in _restricted_growth_strings(shape.size, max_blocks=n)
    )


@lru_cache(maxsize=ENUMERATION_CACHE_SIZE)
def enumerate_brauer(shape: DiagramShape) -> Tuple[Diagram, ...]:
    if shape.size % 2:
        return ()
    found = []
    for rgs in _restricted_growth_strings(shape.size, max_block_size=2):
        d = _from_rgs(shape, rgs)
        if d.is_brauer:
            found.append(d)
    return tuple(found)


@lru_cache(maxsize=ENUMERATION_CACHE_SIZE)
def enumerate_bg(shape: DiagramShape, n: int) -> Tuple[Diagram, ...]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if shape.size < n or (shape.size - n) % 2:
        return ()
    found = []
    for rgs in _restricted_growth_strings(shape.size, max_block_size=2):
        d = _from_rgs(shape, rgs)
        if len(d.free_vertices()) == n:
            found.append(Diagram(d.shape, d.partition, DiagramKind.BRAUER_GROOD, n))
    return tuple(found)


FAMILIES = ("partition", "bounded", "brauer", "bg")


def enumerate_family(family: str, shape: DiagramShape, n: Optional[int] = None) -> Tuple[Diagram, ...]:
    """Dispatch to the enumerator for `family` (one of FAMILIES)."""
    if family == "partition":
        return enumerate_partition_diagrams(shape)
    if family == "brauer":
        return enumerate_brauer(shape)
    if family in ("bounded", "bg"):
        if n is None:
            raise ValueError(f"family '{family}' requires n")
        if family == "bounded":
            return enumerate_partition_diagrams_bounded(shape, n)
        return enumerate_bg(shape, n)
    raise ValueError(f"unknown family '{family}', expected one of {FAMILIES}")
