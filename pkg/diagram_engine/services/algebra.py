# algebra.py - Operasi kategori diagram: komposisi (skalar n^c), tensor product,
# dan kalkulus jellyfish untuk diagram (l+k)\n (Brauer-Grood)
import logging
from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..core.errors import KindNotInContext, LegCountMismatch, OddDimension, ShapeMismatch
from ..core.notation import format_terms, parse_terms
from ..core.setpart import Diagram, DiagramShape, classify_bg, identity_diagram, make_diagram
from ..core.union_find import UnionFind
from ..core.utils import permutation_sign

logger = logging.getLogger(__name__)

Scalar = Fraction


class ContextKind(str, Enum):
    PARTITION = "partition"
    BRAUER = "brauer"
    BRAUER_GROOD = "bg"
    SYMPLECTIC = "symplectic"


@dataclass(frozen=True)
class CategoryContext:
    """
    Which category the diagrams live in, and its parameter n.

    SYMPLECTIC composes Brauer diagrams like BRAUER but also multiplies by the
    orientation sign of the ε pairs, so that the symplectic functor is
    functorial.
    """

    n: int
    kind: ContextKind = ContextKind.PARTITION

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"context parameter n must be positive, got {self.n}")
        if self.kind == ContextKind.SYMPLECTIC and self.n % 2:
            raise OddDimension(self.n)

    def check_member(self, d: Diagram) -> None:
        if self.kind == ContextKind.PARTITION:
            if d.is_brauer_grood:
                raise KindNotInContext(f"(l+k)\\{d.n} diagram is not a morphism of the partition category")
        elif self.kind in (ContextKind.BRAUER, ContextKind.SYMPLECTIC):
            if not d.is_brauer:
                raise KindNotInContext(
                    f"{d.kind.value} diagram {d.blocks} is not a morphism of the {self.kind.value} category"
                )
        elif not (d.is_brauer or (d.is_brauer_grood and d.n == self.n)):
            raise KindNotInContext(
                f"{d.kind.value} diagram {d.blocks} is not a morphism of BG({self.n})"
            )


@dataclass(frozen=True)
class DiagramSum:
    """Formal linear combination of same-shaped diagrams with exact rational coefficients."""

    shape: DiagramShape
    terms: Mapping[Diagram, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[Diagram, Scalar] = {}
        for d, c in self.terms.items():
            if d.shape != self.shape:
                raise ShapeMismatch(f"term of shape {d.shape} in a sum of shape {self.shape}")
            c = Fraction(c)
            if c:
                cleaned[d] = c
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, shape: DiagramShape) -> "DiagramSum":
        return cls(shape, {})

    @classmethod
    def of(cls, d: Diagram, coefficient=1) -> "DiagramSum":
        return cls(d.shape, {d: Fraction(coefficient)})

    @classmethod
    def from_terms(cls, shape: DiagramShape, terms: Iterable[Tuple[Scalar, Diagram]]) -> "DiagramSum":
        acc: Dict[Diagram, Scalar] = defaultdict(Fraction)
        for c, d in terms:
            acc[d] += Fraction(c)
        return cls(shape, acc)

    @classmethod
    def from_text(cls, text: str) -> "DiagramSum":
        shape, terms = parse_terms(text)
        return cls.from_terms(shape, terms)

    def items(self) -> List[Tuple[Diagram, Scalar]]:
        """Terms in a deterministic order (by blocks, then kind)."""
        return sorted(self.terms.items(), key=lambda item: _sort_key(item[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        if not isinstance(other, DiagramSum):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatch(f"cannot add sums of shapes {self.shape} and {other.shape}")
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc.get(d, Fraction(0)) + c
        return DiagramSum(self.shape, acc)

    def scale(self, factor) -> "DiagramSum":
        factor = Fraction(factor)
        return DiagramSum(self.shape, {d: c * factor for d, c in self.terms.items()})

    def __mul__(self, factor) -> "DiagramSum":
        if isinstance(factor, DiagramSum):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __neg__(self) -> "DiagramSum":
        return self.scale(-1)

    def __sub__(self, other: "DiagramSum") -> "DiagramSum":
        return self + (-other)

    def __str__(self) -> str:
        return format_terms(self.shape, [(c, d) for d, c in self.items()])


def _sort_key(d: Diagram):
    return (d.blocks, d.kind.value, d.n or 0)


SumLike = Union[Diagram, DiagramSum]


def as_sum(x: SumLike) -> DiagramSum:
    return x if isinstance(x, DiagramSum) else DiagramSum.of(x)


def add(a: DiagramSum, b: DiagramSum) -> DiagramSum:
    return a + b


def scale(a: DiagramSum, factor) -> DiagramSum:
    return a.scale(factor)


def normalize(a: DiagramSum) -> DiagramSum:
    """Merge repeated diagrams and drop zero coefficients."""
    return DiagramSum.from_terms(a.shape, ((c, d) for d, c in a.terms.items()))


def identity(k: int) -> DiagramSum:
    return DiagramSum.of(identity_diagram(k))


# ---------------------------------------------------------------------------
# Komposisi: tumpuk d2 di atas d1, baris tengah digabung
# id global: atas 1..m, tengah m+1..m+l, bawah m+l+1..m+l+k
# ---------------------------------------------------------------------------


def _check_chain(d2: Diagram, d1: Diagram) -> None:
    if d2.shape.k != d1.shape.l:
        raise ShapeMismatch(
            f"cannot compose {d2.shape} after {d1.shape}: bottom arity {d2.shape.k} != top arity {d1.shape.l}"
        )


def _is_outer(g: int, m: int, l: int) -> bool:
    return g <= m or g > m + l


def _result_label(g: int, m: int, l: int) -> int:
    return g if g <= m else g - l


def _stacked(d2: Diagram, d1: Diagram) -> Tuple[UnionFind, int, int, int]:
    m, l, k = d2.shape.l, d2.shape.k, d1.shape.k
    uf = UnionFind()
    for block in d2.blocks:
        uf.union_all(block)
    for block in d1.blocks:
        uf.union_all(v + m for v in block)
    return uf, m, l, k


def concatenate_count(d2: Diagram, d1: Diagram) -> Tuple[Diagram, int]:
    """
    Stack d2 on d1 and fuse the middle row.

    Returns:
        (concatenated diagram, number of removed middle-only components)
    """
    _check_chain(d2, d1)
    uf, m, l, k = _stacked(d2, d1)
    blocks: List[List[int]] = []
    removed = 0
    for group in uf.groups(range(1, m + l + k + 1)):
        outer = [_result_label(g, m, l) for g in group if _is_outer(g, m, l)]
        if outer:
            blocks.append(outer)
        else:  # komponen hanya di tengah, jadi faktor n
            removed += 1
    return make_diagram(DiagramShape(k, m), blocks), removed


def _orientation_sign(d2: Diagram, d1: Diagram) -> int:
    """
    Sign picked up by the ε pairs when two Brauer diagrams are stacked.

    Every same-row pair is ε oriented left to right. A walk that crosses one
    against its orientation contributes -1, and every two ε pairs on a walk
    multiply to -1 (E·E = -I). Walks start at their leftmost outer end, so an
    odd number of ε pairs lands on a left-to-right result pair.
    """
    m, l, k = d2.shape.l, d2.shape.k, d1.shape.k

    def row(g: int) -> int:  # 0 = atas d2, 1 = baris tengah, 2 = bawah d1
        return 0 if g <= m else (1 if g <= m + l else 2)

    # layers[0] dan layers[1]: pasangan vertex milik d2 dan d1, dua arah
    layers: Tuple[Dict[int, int], Dict[int, int]] = ({}, {})
    for layer, (d, shift) in enumerate(((d2, 0), (d1, m))):
        for u, v in d.blocks:
            layers[layer][u + shift] = v + shift
            layers[layer][v + shift] = u + shift

    visited = set()
    sign = 1

    def walk(start: int, layer: int) -> int:
        eps = backward = 0  # jumlah pasangan ε dan jumlah yang dilewati melawan arah
        cur = start
        while True:  # jalan bergantian antara layer d2 dan d1
            nxt = layers[layer][cur]
            visited.add(cur)
            visited.add(nxt)
            if row(cur) == row(nxt):  # pasangan satu baris = ε
                eps += 1
                backward += cur > nxt  # kanan ke kiri
            if nxt == start or _is_outer(nxt, m, l):
                break
            cur = nxt
            layer = 1 - layer
        return (-1) ** backward * (-1) ** (eps // 2)  # E·E = -I

    # path terbuka dulu, dimulai dari ujung luar paling kiri
    for g in range(1, m + l + k + 1):
        if g in visited:
            continue
        if g <= m:
            sign *= walk(g, 0)
        elif g > m + l:
            sign *= walk(g, 1)
    # sisa vertex tengah hanya ada di loop tertutup
    for g in range(m + 1, m + l + 1):
        if g not in visited:
            sign *= walk(g, 0)
    return sign


def _compose_plain(ctx: CategoryContext, d2: Diagram, d1: Diagram) -> DiagramSum:
    d, removed = concatenate_count(d2, d1)
    coefficient = ctx.n**removed
    if ctx.kind == ContextKind.SYMPLECTIC:
        coefficient *= _orientation_sign(d2, d1)
    return DiagramSum.of(d, coefficient)


# ---------------------------------------------------------------------------
# Jellyfish: kaki dari vertex bebas diagram (l+k)\n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LegEnd:
    """Where a leg's wire ends: an outer result vertex or another head's leg."""

    vertex: Optional[int] = None
    leg: Optional[int] = None

    def key(self, owner: Mapping[int, int]):
        if self.vertex is not None:
            return (0, self.vertex)
        return (1, owner[self.leg], self.leg)


@dataclass(frozen=True)
class JellyfishState:
    """
    A concatenated diagram with up to two jellyfish heads still attached.

    heads[h] lists head h's leg ids in their current order; ends maps each leg
    to the wire end it reaches; pairs are result blocks joining two outer
    vertices; loops counts the removed middle-only components.
    """

    shape: DiagramShape
    n: int
    heads: Tuple[Tuple[int, ...], ...]
    ends: Mapping[int, LegEnd]
    owner: Mapping[int, int]
    pairs: Tuple[Tuple[int, ...], ...] = ()
    loops: int = 0
    zero: bool = False


def _attach_stacked(ctx: CategoryContext, d2: Diagram, d1: Diagram) -> JellyfishState:
    """Concatenate d2 over d1 with the heads of every (l+k)\\n diagram attached (top head first)."""
    uf, m, l, k = _stacked(d2, d1)
    heads: List[Tuple[int, ...]] = []
    owner: Dict[int, int] = {}
    legs_at: Dict[int, List[int]] = defaultdict(list)  # vertex bertumpuk -> id kaki yang menempel
    leg_count = 0
    for d, shift in ((d2, 0), (d1, m)):
        if not d.is_brauer_grood:
            continue
        ids = []
        for v in d.free_vertices():  # satu kaki per vertex bebas, urut label
            legs_at[v + shift].append(leg_count)
            owner[leg_count] = len(heads)
            ids.append(leg_count)
            leg_count += 1
        heads.append(tuple(ids))

    ends: Dict[int, LegEnd] = {}
    pairs: List[Tuple[int, ...]] = []
    loops = 0
    for group in uf.groups(range(1, m + l + k + 1)):
        outer = [_result_label(g, m, l) for g in group if _is_outer(g, m, l)]
        legs = [leg for g in group for leg in legs_at.get(g, ())]
        if not outer and not legs:  # loop tertutup di baris tengah
            loops += 1
        elif len(outer) == 2:  # pasangan biasa di hasil
            pairs.append(tuple(sorted(outer)))
        elif len(outer) == 1 and len(legs) == 1:  # kaki berakhir di vertex luar
            ends[legs[0]] = LegEnd(vertex=outer[0])
        elif len(legs) == 2 and not outer:  # kaki bertemu kaki
            ends[legs[0]] = LegEnd(leg=legs[1])
            ends[legs[1]] = LegEnd(leg=legs[0])
        else:
            raise ValueError(f"stacked component {group} has {len(outer) + len(legs)} ends, expected 0 or 2")
    return JellyfishState(DiagramShape(k, m), ctx.n, tuple(heads), ends, owner, tuple(pairs), loops)


def _uncrossing_sign(keys) -> int:
    return permutation_sign(keys)


def rule1_normalize(state: JellyfishState) -> Tuple[int, JellyfishState]:
    """
    Uncross every head by sorting its legs by where they end.

    Returns the sign of the sorting permutations; if two legs of one head are
    joined the state comes back flagged zero.
    """
    for leg, end in state.ends.items():
        if end.leg is not None and state.owner[end.leg] == state.owner[leg]:
            logger.debug(f"Legs {leg} and {end.leg} of one jellyfish are joined, composition is zero")
            return 1, replace(state, zero=True)
    sign = 1
    heads = []
    for head in state.heads:
        keys = [state.ends[leg].key(state.owner) for leg in head]
        sign *= _uncrossing_sign(keys)
        heads.append(tuple(leg for _, leg in sorted(zip(keys, head))))
    return sign, replace(state, heads=tuple(heads))


def rule2_expand(state: JellyfishState) -> DiagramSum:
    """
    Replace two n-legged heads by Σ_σ sgn(σ) · (leg i of head 0 joined to leg σ(i) of head 1).

    Loops closed by the new joins are counted as factors of n; the result is a
    sum of Brauer diagrams.
    """
    n = state.n
    if len(state.heads) != 2 or any(len(head) != n for head in state.heads):
        raise LegCountMismatch(
            f"rule 2 needs two heads with {n} legs each, got {[len(h) for h in state.heads]}"
        )
    first, second = state.heads
    nodes = [("leg", leg) for leg in state.ends] + [
        ("vertex", end.vertex) for end in state.ends.values() if end.vertex is not None
    ]
    acc: Dict[Diagram, Scalar] = defaultdict(Fraction)
    for sigma in permutations(range(n)):  # n! suku, masing-masing bertanda sgn(σ)
        uf = UnionFind()
        for leg, end in state.ends.items():
            other = ("vertex", end.vertex) if end.vertex is not None else ("leg", end.leg)
            uf.union(("leg", leg), other)
        for i, j in enumerate(sigma):  # kaki i kepala atas disambung ke kaki σ(i) kepala bawah
            uf.union(("leg", first[i]), ("leg", second[j]))
        blocks = [list(p) for p in state.pairs]
        closed = 0
        for group in uf.groups(nodes):
            vertices = [value for tag, value in group if tag == "vertex"]
            if vertices:
                blocks.append(vertices)
            else:
                closed += 1
        acc[make_diagram(state.shape, blocks)] += permutation_sign(sigma) * n**closed
    return DiagramSum(state.shape, acc)


def _detach_single(state: JellyfishState) -> Diagram:
    (head,) = state.heads
    blocks = [list(p) for p in state.pairs] + [[state.ends[leg].vertex] for leg in head]
    return classify_bg(make_diagram(state.shape, blocks), state.n)


def _compose_jellyfish(ctx: CategoryContext, d2: Diagram, d1: Diagram) -> DiagramSum:
    _check_chain(d2, d1)
    state = _attach_stacked(ctx, d2, d1)
    sign, state = rule1_normalize(state)  # Rule 1: luruskan kaki, catat tandanya
    if state.zero:
        return DiagramSum.zero(state.shape)
    factor = sign * ctx.n**state.loops
    if len(state.heads) == 1:  # satu kepala tetap jadi diagram (l+k)\n
        return DiagramSum.of(_detach_single(state), factor)
    return rule2_expand(state).scale(factor)  # dua kepala: Rule 2 jadi jumlah diagram Brauer


def compose_diagrams(ctx: CategoryContext, d2: Diagram, d1: Diagram) -> DiagramSum:
    """d2 • d1 for single diagrams (d2 on top)."""
    _check_chain(d2, d1)
    ctx.check_member(d2)
    ctx.check_member(d1)
    if ctx.kind == ContextKind.BRAUER_GROOD and (d2.is_brauer_grood or d1.is_brauer_grood):
        return _compose_jellyfish(ctx, d2, d1)
    return _compose_plain(ctx, d2, d1)


def compose(ctx: CategoryContext, d2: SumLike, d1: SumLike) -> DiagramSum:
    """
    Bilinear composition d2 • d1 (d1 applied first).

    Raises:
        ShapeMismatch: if the bottom arity of d2 is not the top arity of d1
        KindNotInContext: if a term does not belong to ctx
    """
    d2, d1 = as_sum(d2), as_sum(d1)
    if d2.shape.k != d1.shape.l:
        raise ShapeMismatch(f"cannot compose {d2.shape} after {d1.shape}")
    acc: Dict[Diagram, Scalar] = defaultdict(Fraction)
    for a, ca in d2.items():
        for b, cb in d1.items():
            for d, c in compose_diagrams(ctx, a, b).terms.items():
                acc[d] += ca * cb * c
    return DiagramSum(DiagramShape(d1.shape.k, d2.shape.l), acc)


# ---------------------------------------------------------------------------
# Tensor product: d1 di kiri, d2 di kanan
# ---------------------------------------------------------------------------


def tensor_relabelers(shape1: DiagramShape, shape2: DiagramShape):
    """
    Label maps for placing shape1 left of shape2.

    In the (k1+k2, l1+l2) result the top row reads d1 top then d2 top and the
    bottom row reads d1 bottom then d2 bottom.
    """
    k1, l1 = shape1.k, shape1.l
    l2 = shape2.l

    def left(v: int) -> int:
        return v if v <= l1 else v + l2

    def right(v: int) -> int:
        return l1 + v if v <= l2 else v + l1 + k1

    return left, right


def tensor_diagrams(ctx: CategoryContext, d1: Diagram, d2: Diagram) -> DiagramSum:
    ctx.check_member(d1)
    ctx.check_member(d2)
    shape = DiagramShape(d1.k + d2.k, d1.l + d2.l)
    left, right = tensor_relabelers(d1.shape, d2.shape)
    blocks = [[left(v) for v in b] for b in d1.blocks] + [[right(v) for v in b] for b in d2.blocks]
    if not (d1.is_brauer_grood and d2.is_brauer_grood):
        d = make_diagram(shape, blocks)
        if d1.is_brauer_grood or d2.is_brauer_grood:
            d = classify_bg(d, ctx.n)
        return DiagramSum.of(d)

    heads = []
    owner: Dict[int, int] = {}
    ends: Dict[int, LegEnd] = {}
    for h, (d, relabel) in enumerate(((d1, left), (d2, right))):
        ids = []
        for v in d.free_vertices():
            leg = len(owner)
            owner[leg] = h
            ends[leg] = LegEnd(vertex=relabel(v))
            ids.append(leg)
        heads.append(tuple(ids))
    pairs = tuple(
        tuple(relabel(v) for v in b)
        for d, relabel in ((d1, left), (d2, right))
        for b in d.paired_blocks()
    )
    state = JellyfishState(shape, ctx.n, tuple(heads), ends, owner, pairs)
    sign, state = rule1_normalize(state)
    return rule2_expand(state).scale(sign)


def tensor(ctx: CategoryContext, d1: SumLike, d2: SumLike) -> DiagramSum:
    """Bilinear tensor product d1 ⊗ d2 (d1 on the left)."""
    d1, d2 = as_sum(d1), as_sum(d2)
    shape = DiagramShape(d1.shape.k + d2.shape.k, d1.shape.l + d2.shape.l)
    acc: Dict[Diagram, Scalar] = defaultdict(Fraction)
    for a, ca in d1.items():
        for b, cb in d2.items():
            for d, c in tensor_diagrams(ctx, a, b).terms.items():
                acc[d] += ca * cb * c
    return DiagramSum(shape, acc)
