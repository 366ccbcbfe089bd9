# checks.py - Suite properti yang dijalankan oleh perintah `check`
# Setiap suite mengembalikan SuiteResult; kegagalan pertama disimpan sebagai counterexample
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import CHECK_TRIALS, CONTINUOUS_TOLERANCE, DEFAULT_SEED
from ..core.counting import bell, bell_bounded, count_brauer, count_brauer_grood
from ..core.notation import format_diagram
from ..core.operators import DenseOperator
from ..core.setpart import (
    Diagram,
    DiagramShape,
    enumerate_bg,
    enumerate_brauer,
    enumerate_partition_diagrams,
    enumerate_partition_diagrams_bounded,
    identity_diagram,
)
from ..core.utils import make_rng
from .algebra import CategoryContext, ContextKind, DiagramSum, SumLike, as_sum, compose, tensor
from .fast_apply import apply_fast_batch, planarize
from .functors import GroupTag, realize, spanning_set, theta
from .groups import check_equivariance, sample

logger = logging.getLogger(__name__)

SUITES = (
    "counting",
    "canonical",
    "associativity",
    "interchange",
    "functoriality",
    "monoidality",
    "fast_apply",
    "equivariance",
    "negative_control",
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None
    max_residual: Optional[float] = None

    def summary(self) -> str:
        line = f"suite={self.name} status={'pass' if self.passed else 'fail'} cases={self.cases}"
        if self.max_residual is not None:
            line += f" max_residual={self.max_residual:.3g}"
        return line


def family(ctx: CategoryContext, shape: DiagramShape) -> Tuple[Diagram, ...]:
    """All diagrams of `shape` that are morphisms of ctx."""
    if ctx.kind == ContextKind.PARTITION:
        return enumerate_partition_diagrams(shape)
    if ctx.kind == ContextKind.BRAUER_GROOD:
        return enumerate_brauer(shape) + enumerate_bg(shape, ctx.n)
    return enumerate_brauer(shape)


def random_member(ctx: CategoryContext, shape: DiagramShape, rng: np.random.Generator) -> Optional[Diagram]:
    members = family(ctx, shape)
    if not members:
        return None
    return members[int(rng.integers(len(members)))]


def random_chain(
    ctx: CategoryContext, rng: np.random.Generator, length: int, max_arity: int = 3
) -> List[Diagram]:
    """`length` composable diagrams, listed top first; arities drawn from 0..max_arity."""
    while True:
        arities = [int(a) for a in rng.integers(0, max_arity + 1, size=length + 1)]
        chain = [random_member(ctx, DiagramShape(arities[i + 1], arities[i]), rng) for i in range(length)]
        if all(d is not None for d in chain):
            return chain


def random_diagrams(
    ctx: CategoryContext, rng: np.random.Generator, count: int, max_arity: int = 3
) -> List[Diagram]:
    found = []
    while len(found) < count:
        k, l = (int(a) for a in rng.integers(0, max_arity + 1, size=2))
        d = random_member(ctx, DiagramShape(k, l), rng)
        if d is not None:
            found.append(d)
    return found


def _first_difference(expected: np.ndarray, got: np.ndarray) -> str:
    row, col = (int(i) for i in np.argwhere(expected != got)[0])
    return f"index=({row},{col}) expected={expected[row, col]} got={got[row, col]}"


def _context_label(ctx: CategoryContext) -> str:
    return f"{ctx.kind.value}:n={ctx.n}"


def _run_cases(name: str, cases: Iterable[Callable[[], Optional[str]]]) -> SuiteResult:
    count = 0
    for case in cases:
        count += 1
        failure = case()
        if failure is not None:
            logger.warning(f"suite {name} failed on case {count}: {failure}")
            return SuiteResult(name, False, count, failure)
    logger.info(f"suite {name} passed {count} cases")
    return SuiteResult(name, True, count)


# ---------------------------------------------------------------------------
# setpart
# ---------------------------------------------------------------------------


def _expect(label: str, expected: int, found: int) -> Callable[[], Optional[str]]:
    return lambda: None if expected == found else f"{label}: expected {expected}, enumerated {found}"


def counting_suite(max_size: int = 8, max_brauer: int = 10, max_n: int = 8) -> SuiteResult:
    def cases():
        for m in range(max_size + 1):
            shape = DiagramShape(m // 2, m - m // 2)
            full = enumerate_partition_diagrams(shape)
            yield _expect(f"bell({m})", bell(m), len(full))
            for n in range(1, max_n + 1):
                if n >= m:
                    yield _expect(f"bell_bounded({m},{n})", bell(m), bell_bounded(m, n))
                    continue
                bounded = enumerate_partition_diagrams_bounded(shape, n)
                yield _expect(f"bell_bounded({m},{n})", bell_bounded(m, n), len(bounded))
            for n in range(1, min(m, max_n) + 1):
                brute = sum(
                    1 for d in full if all(len(b) <= 2 for b in d.blocks) and len(d.free_vertices()) == n
                )
                yield _expect(f"bg({m},{n}) brute force", count_brauer_grood(m, n), brute)
                yield _expect(f"bg({m},{n})", count_brauer_grood(m, n), len(enumerate_bg(shape, n)))
        for m in range(max_brauer + 1):
            found = len(enumerate_brauer(DiagramShape(m // 2, m - m // 2)))
            yield _expect(f"brauer({m})", count_brauer(m), found)

    return _run_cases("counting", cases())


def canonical_suite(max_size: int = 6) -> SuiteResult:
    def cases():
        for m in range(max_size + 1):
            for k in range(m + 1):
                diagrams = enumerate_partition_diagrams(DiagramShape(k, m - k))

                def check(diagrams=diagrams):
                    if len(set(diagrams)) != len(diagrams):
                        return f"duplicate diagram in shape {diagrams[0].shape}"
                    for d in diagrams:
                        if d.partition.canonical() != d.partition:
                            return f"{format_diagram(d)} is not canonical"
                        if d.partition.canonical().canonical() != d.partition.canonical():
                            return f"canonicalization of {format_diagram(d)} is not idempotent"
                    return None

                yield check

    return _run_cases("canonical", cases())


def same_morphism(ctx: CategoryContext, left: SumLike, right: SumLike) -> bool:
    """
    Equality of two morphisms of ctx.

    Partition, Brauer and symplectic sums are compared term by term. In the
    Brauer-Grood context the (l+k)\\n diagrams only span the morphisms and the
    jellyfish relations link different sums, so unequal sums are compared
    through their Ψ matrices.
    """
    left, right = as_sum(left), as_sum(right)
    if left == right:
        return True
    if ctx.kind != ContextKind.BRAUER_GROOD or left.shape != right.shape:
        return False
    return bool(np.array_equal(realize(ctx, left).entries, realize(ctx, right).entries))


# ---------------------------------------------------------------------------
# diagram-algebra
# ---------------------------------------------------------------------------


def associativity_suite(ctx: CategoryContext, trials: int = CHECK_TRIALS, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = make_rng(seed)

    def cases():
        for _ in range(trials):
            a, b, c = random_chain(ctx, rng, 3)

            def check(a=a, b=b, c=c):
                left = compose(ctx, a, compose(ctx, b, c))
                right = compose(ctx, compose(ctx, a, b), c)
                if not same_morphism(ctx, left, right):
                    return f"compose: a={format_diagram(a)} b={format_diagram(b)} c={format_diagram(c)}"
                return None

            yield check
            x, y, z = random_diagrams(ctx, rng, 3, max_arity=2)

            def check_tensor(x=x, y=y, z=z):
                left = tensor(ctx, tensor(ctx, x, y), z)
                if not same_morphism(ctx, left, tensor(ctx, x, tensor(ctx, y, z))):
                    return f"tensor: {format_diagram(x)} | {format_diagram(y)} | {format_diagram(z)}"
                return None

            yield check_tensor

    return _run_cases(f"associativity:{_context_label(ctx)}", cases())


def interchange_suite(ctx: CategoryContext, trials: int = CHECK_TRIALS, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = make_rng(seed)

    def cases():
        for _ in range(trials):
            f, g = random_diagrams(ctx, rng, 2)

            def check(f=f, g=g):
                direct = tensor(ctx, f, g)
                g_after = compose(
                    ctx, tensor(ctx, identity_diagram(f.l), g), tensor(ctx, f, identity_diagram(g.k))
                )
                f_after = compose(
                    ctx, tensor(ctx, f, identity_diagram(g.l)), tensor(ctx, identity_diagram(f.k), g)
                )
                if not (same_morphism(ctx, direct, g_after) and same_morphism(ctx, direct, f_after)):
                    return f"f={format_diagram(f)} g={format_diagram(g)}"
                if not same_morphism(ctx, compose(ctx, identity_diagram(f.l), f), f):
                    return f"identity law fails for {format_diagram(f)}"
                return None

            yield check

    return _run_cases(f"interchange:{_context_label(ctx)}", cases())


# ---------------------------------------------------------------------------
# matrix-functors
# ---------------------------------------------------------------------------


def functoriality_suite(ctx: CategoryContext, trials: int = CHECK_TRIALS, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = make_rng(seed)

    def cases():
        for _ in range(trials):
            d2, d1 = random_chain(ctx, rng, 2)

            def check(d2=d2, d1=d1):
                expected = (realize(ctx, d2) @ realize(ctx, d1)).entries
                got = realize(ctx, compose(ctx, d2, d1)).entries
                if not np.array_equal(expected, got):
                    return f"d2={format_diagram(d2)} d1={format_diagram(d1)} {_first_difference(expected, got)}"
                return None

            yield check

    return _run_cases(f"functoriality:{_context_label(ctx)}", cases())


def monoidality_suite(ctx: CategoryContext, trials: int = CHECK_TRIALS, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = make_rng(seed)

    def cases():
        for _ in range(trials):
            d1, d2 = random_diagrams(ctx, rng, 2)

            def check(d1=d1, d2=d2):
                expected = realize(ctx, d1).kron(realize(ctx, d2)).entries
                got = realize(ctx, tensor(ctx, d1, d2)).entries
                if not np.array_equal(expected, got):
                    return f"d1={format_diagram(d1)} d2={format_diagram(d2)} {_first_difference(expected, got)}"
                return None

            yield check

    return _run_cases(f"monoidality:{_context_label(ctx)}", cases())


# ---------------------------------------------------------------------------
# fast-apply
# ---------------------------------------------------------------------------


def fast_apply_suite(
    max_size: int = 6, ns: Sequence[int] = (2, 3), vectors: int = 100, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """
    Recomposition identity plus fast == dense on every diagram with l+k <= max_size.

    Rational test vectors are drawn as integer numerators over a per-vector
    denominator; both paths are linear, so comparing numerators is exact.
    """
    rng = make_rng(seed)

    def cases():
        for n in ns:
            ctx = CategoryContext(n, ContextKind.PARTITION)
            for m in range(max_size + 1):
                for k in range(m + 1):
                    for d in enumerate_partition_diagrams(DiagramShape(k, m - k)):
                        numerators = rng.integers(-50, 51, size=(n**k, vectors))

                        def check(d=d, n=n, ctx=ctx, numerators=numerators):
                            op = planarize(d, n)
                            if op.recompose(ctx) != DiagramSum.of(d):
                                return f"recomposition of {format_diagram(d)} at n={n} is {op.recompose(ctx)}"
                            dense = theta(n, d).entries @ numerators
                            fast = apply_fast_batch(op, numerators)
                            if not np.array_equal(dense, fast):
                                column = int(np.argwhere(dense != fast)[0][1])
                                return f"fast path differs for {format_diagram(d)} at n={n}, vector #{column}"
                            return None

                        yield check

    return _run_cases("fast_apply", cases())


# ---------------------------------------------------------------------------
# group-actions
# ---------------------------------------------------------------------------


def _group_matrices(group: GroupTag, n: int, max_arity: int) -> List[Tuple[Tuple[int, int], DenseOperator]]:
    found = []
    for k in range(max_arity + 1):
        for l in range(max_arity + 1):
            found.extend(((k, l), M) for M in spanning_set(group, k, l, n))
    return found


def equivariance_suite(
    group: GroupTag,
    n: int,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    max_arity: int = 2,
    tolerance: float = CONTINUOUS_TOLERANCE,
) -> SuiteResult:
    """Every realized spanning matrix with k, l <= max_arity commutes with sampled group elements."""
    group = GroupTag(group)
    name = f"equivariance:{group.value}:n={n}"
    matrices = _group_matrices(group, n, max_arity)
    worst = 0.0
    cases = 0
    for i in range(samples):
        g = sample(group, n, seed + i)
        for shape, M in matrices:
            cases += 1
            residual = check_equivariance(g, M)
            worst = max(worst, float(residual))
            exact = group == GroupTag.SYM
            if (exact and residual != 0) or (not exact and residual >= tolerance):
                failure = f"shape={shape} sample seed={seed + i} residual={residual}"
                logger.warning(f"suite {name} failed: {failure}")
                return SuiteResult(name, False, cases, failure, worst)
    logger.info(f"suite {name} passed {cases} cases, max residual {worst:.3g}")
    return SuiteResult(name, True, cases, None, worst)


def negative_control_suite(
    group: GroupTag = GroupTag.SYM,
    n: int = 2,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    tolerance: float = CONTINUOUS_TOLERANCE,
) -> SuiteResult:
    """A bare matrix unit E_{I,J} must fail the equivariance check for some sampled element."""
    group = GroupTag(group)
    name = f"negative_control:{group.value}:n={n}"
    entries = np.zeros((n, n), dtype=np.int64)
    entries[0, 0] = 1
    unit = DenseOperator(DiagramShape(1, 1), n, entries)
    for i in range(samples):
        residual = check_equivariance(sample(group, n, seed + i), unit)
        if residual > tolerance:
            logger.info(f"suite {name}: matrix unit rejected by sample {i} (residual {residual})")
            return SuiteResult(name, True, i + 1, None, float(residual))
    return SuiteResult(name, False, samples, f"matrix unit E_(0,0) passed all {samples} samples")


# ---------------------------------------------------------------------------
# Konfigurasi default untuk `check` tanpa filter
# ---------------------------------------------------------------------------

DEFAULT_CONTEXTS: Tuple[CategoryContext, ...] = (
    CategoryContext(1, ContextKind.PARTITION),
    CategoryContext(2, ContextKind.PARTITION),
    CategoryContext(3, ContextKind.PARTITION),
    CategoryContext(1, ContextKind.BRAUER),
    CategoryContext(2, ContextKind.BRAUER),
    CategoryContext(3, ContextKind.BRAUER),
    CategoryContext(2, ContextKind.BRAUER_GROOD),
    CategoryContext(3, ContextKind.BRAUER_GROOD),
    CategoryContext(2, ContextKind.SYMPLECTIC),
)

DEFAULT_GROUPS: Tuple[Tuple[GroupTag, int], ...] = (
    (GroupTag.SYM, 1),
    (GroupTag.SYM, 2),
    (GroupTag.SYM, 3),
    (GroupTag.SYM, 4),
    (GroupTag.ORTH, 1),
    (GroupTag.ORTH, 2),
    (GroupTag.ORTH, 3),
    (GroupTag.SYMP, 2),
    (GroupTag.SPEC_ORTH, 1),
    (GroupTag.SPEC_ORTH, 2),
    (GroupTag.SPEC_ORTH, 3),
)


def run_suites(
    names: Sequence[str] = SUITES,
    contexts: Sequence[CategoryContext] = DEFAULT_CONTEXTS,
    groups: Sequence[Tuple[GroupTag, int]] = DEFAULT_GROUPS,
    trials: int = CHECK_TRIALS,
    seed: int = DEFAULT_SEED,
    stop_on_failure: bool = True,
) -> List[SuiteResult]:
    """Run the named suites in SUITES order; stops after the first failing suite by default."""
    unknown = set(names) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}, expected a subset of {SUITES}")
    results: List[SuiteResult] = []

    def runs():
        for name in SUITES:
            if name not in names:
                continue
            if name == "counting":
                yield lambda: counting_suite()
            elif name == "canonical":
                yield lambda: canonical_suite()
            elif name == "fast_apply":
                yield lambda: fast_apply_suite(seed=seed)
            elif name == "equivariance":
                for group, n in groups:
                    yield lambda group=group, n=n: equivariance_suite(group, n, seed=seed)
            elif name == "negative_control":
                # di n=1 matrix unit 1x1 selalu equivariant, tidak ada yang bisa ditolak
                for group, n in groups:
                    if n < 2:
                        continue
                    yield lambda group=group, n=n: negative_control_suite(group, n, seed=seed)
            else:
                suite = _CONTEXT_SUITES[name]
                for ctx in contexts:
                    yield lambda suite=suite, ctx=ctx: suite(ctx, trials, seed)

    for run in runs():
        result = run()
        results.append(result)
        if stop_on_failure and not result.passed:
            break
    return results


_CONTEXT_SUITES = {
    "associativity": associativity_suite,
    "interchange": interchange_suite,
    "functoriality": functoriality_suite,
    "monoidality": monoidality_suite,
}
