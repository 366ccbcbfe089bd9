# cli.py - Antarmuka command-line: enumerate, compose, tensor, matrix, apply, bench, check
# stdout hanya berisi data, semua diagnostik (log, pesan error) ke stderr
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .config import CHECK_TRIALS, LOG_FORMAT
from .core.counting import bell, bell_bounded, count_brauer, count_brauer_grood
from .core.errors import (
    DiagramEngineError,
    KindMismatch,
    KindNotInContext,
    NotBrauer,
    NotBrauerGrood,
    NotationError,
    OddDimension,
    ShapeMismatch,
    SizeLimitExceeded,
)
from .core.notation import format_diagram
from .core.setpart import DiagramShape, classify_bg, enumerate_family
from .core.storage import format_matrix, format_vector, parse_vector
from .models import RunConfig
from .services.algebra import CategoryContext, ContextKind, DiagramSum, compose, tensor
from .services.checks import DEFAULT_CONTEXTS, DEFAULT_GROUPS, SUITES, run_suites
from .services.fast_apply import apply_dense, apply_fast, bench, bench_table, planarize
from .services.functors import FunctorName, GroupTag, realize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_KIND = 4
EXIT_LENGTH = 5
EXIT_CAP = 6

FUNCTOR_CONTEXTS = {
    FunctorName.THETA: ContextKind.PARTITION,
    FunctorName.PHI: ContextKind.BRAUER,
    FunctorName.X_SP: ContextKind.SYMPLECTIC,
    FunctorName.PSI: ContextKind.BRAUER_GROOD,
}

DEFAULT_BENCH_CASES = ("1,1,2", "5,3,4", "4,4,3")


class CheckFailed(Exception):
    """Raised by cmd_check after printing the summary of a failing run."""


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _retag_for_context(ctx: CategoryContext, s: DiagramSum) -> DiagramSum:
    # di konteks BG, diagram general dengan tepat n singleton dibaca sebagai (l+k)\n
    if ctx.kind != ContextKind.BRAUER_GROOD:
        return s
    terms = []
    for d, c in s.items():
        if not (d.is_brauer or d.is_brauer_grood):
            d = classify_bg(d, ctx.n)
        terms.append((c, d))
    return DiagramSum.from_terms(s.shape, terms)


def _parse_sum(ctx: CategoryContext, text: str) -> DiagramSum:
    return _retag_for_context(ctx, DiagramSum.from_text(text))


def _config(args: argparse.Namespace, **overrides) -> RunConfig:
    fields = {
        key: getattr(args, key)
        for key in ("n", "k", "l", "group", "functor", "context", "family", "mode", "seed", "dense_cap", "trials")
        if getattr(args, key, None) is not None
    }
    if getattr(args, "format", None) is not None:
        fields["output_format"] = args.format
    fields.update(overrides)
    return RunConfig(**fields)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = _config(args)
    shape = DiagramShape(config.k, config.l)
    m = shape.size
    if args.count_only:
        counts = {
            "partition": lambda: bell(m),
            "bounded": lambda: bell_bounded(m, config.n),
            "brauer": lambda: count_brauer(m),
            "bg": lambda: count_brauer_grood(m, config.n),
        }
        print(f"count={counts[config.family]()}")
        return EXIT_OK
    diagrams = enumerate_family(config.family, shape, config.n)
    for d in diagrams:
        print(format_diagram(d))
    print(f"count={len(diagrams)}")
    logger.info(f"enumerated {len(diagrams)} {config.family} diagrams of shape {shape}")
    return EXIT_OK


def _binary(args: argparse.Namespace, op) -> int:
    config = _config(args)
    ctx = CategoryContext(config.require_n(), config.context or ContextKind.PARTITION)
    first, second = _parse_sum(ctx, args.first), _parse_sum(ctx, args.second)
    print(op(ctx, first, second))
    return EXIT_OK


def cmd_compose(args: argparse.Namespace) -> int:
    """`compose D2 D1` prints D2 • D1 (D1 applied first)."""
    return _binary(args, compose)


def cmd_tensor(args: argparse.Namespace) -> int:
    return _binary(args, tensor)


def cmd_matrix(args: argparse.Namespace) -> int:
    config = _config(args)
    functor = config.functor or FunctorName.THETA
    ctx = CategoryContext(config.require_n(), FUNCTOR_CONTEXTS[functor])
    s = _parse_sum(ctx, args.diagram)
    M = realize(ctx, s, functor, config.dense_cap)
    sys.stdout.write(format_matrix(M, config.output_format))
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    v = parse_vector(_read_source(args.vector))
    config = _config(args, n=args.n or v.n)
    if v.n != config.n:
        raise ShapeMismatch(f"vector file is over n={v.n}, but --n {config.n} was given")
    functor = config.functor or FunctorName.THETA
    ctx = CategoryContext(config.n, FUNCTOR_CONTEXTS[functor])
    s = _parse_sum(ctx, args.diagram)
    if v.order != s.shape.k:
        raise ShapeMismatch(
            f"vector has {len(v.values)} values, the diagram needs n^k = {config.n ** s.shape.k}"
        )

    def dense():
        return apply_dense(realize(ctx, s, functor, config.dense_cap), v)

    def fast():
        terms = s.items()
        if functor != FunctorName.THETA or len(terms) != 1 or terms[0][1] != 1:
            raise KindMismatch("the fast path applies a single partition diagram under theta")
        return apply_fast(planarize(terms[0][0], config.n), v)

    if args.verify:
        deviation = dense().max_deviation(fast())
        print(f"deviation={deviation}")
        return EXIT_OK
    result = fast() if args.path == "fast" else dense()
    sys.stdout.write(format_vector(result))
    return EXIT_OK


def _bench_case(text: str):
    try:
        k, l, n = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bench case must be k,l,n, got {text!r}") from None
    return k, l, n


def cmd_bench(args: argparse.Namespace) -> int:
    config = _config(args)
    cases = args.case or [_bench_case(text) for text in DEFAULT_BENCH_CASES]
    reports = [
        bench(DiagramShape(k, l), n, trials=config.trials, seed=config.seed, cap=config.dense_cap)
        for k, l, n in cases
    ]
    bench_table(reports).to_csv(sys.stdout, index=False)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    config = _config(args)
    contexts: Sequence[CategoryContext] = [
        ctx
        for ctx in DEFAULT_CONTEXTS
        if (config.context is None or ctx.kind == config.context) and (config.n is None or ctx.n == config.n)
    ]
    if not contexts and config.context is not None and config.n is not None:
        contexts = [CategoryContext(config.n, config.context)]
    groups = [
        (group, n)
        for group, n in DEFAULT_GROUPS
        if (config.group is None or group == config.group) and (config.n is None or n == config.n)
    ]
    if not groups and config.group is not None and config.n is not None:
        groups = [(config.group, config.n)]
    results = run_suites(
        args.suite or SUITES,
        contexts=contexts,
        groups=groups,
        trials=args.trials or CHECK_TRIALS,
        seed=config.seed,
    )
    for result in results:
        print(result.summary())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"counterexample: {failed[0].counterexample}")
        raise CheckFailed(failed[0].name)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diagram_engine", description="Partition / Brauer diagram engine")
    parser.add_argument("--verbose", action="store_true", help="log at INFO to stderr")
    parser.add_argument("--debug", action="store_true", help="log at DEBUG to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def with_seed(p):
        p.add_argument("--seed", type=int, default=None, help="seed for every random draw (default 0)")
        return p

    p = commands.add_parser("enumerate", help="list the diagrams of a family")
    p.add_argument("--family", required=True, choices=["partition", "bounded", "brauer", "bg"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(handler=cmd_enumerate)

    for name, handler, help_text in (
        ("compose", cmd_compose, "compose FIRST after SECOND"),
        ("tensor", cmd_tensor, "tensor FIRST (left) with SECOND (right)"),
    ):
        p = commands.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--context", choices=[c.value for c in ContextKind], default="partition")
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(handler=handler)

    p = commands.add_parser("matrix", help="emit the matrix of a diagram or diagram sum")
    p.add_argument("--functor", choices=[f.value for f in FunctorName], default="theta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["dense", "sparse"], default="dense")
    p.add_argument("--dense-cap", type=int, default=None)
    p.add_argument("diagram")
    p.set_defaults(handler=cmd_matrix)

    p = commands.add_parser("apply", help="apply a diagram operator to a vector file")
    p.add_argument("--vector", required=True, help="vector file, or - for stdin")
    p.add_argument("--n", type=int)
    p.add_argument("--functor", choices=[f.value for f in FunctorName], default="theta")
    path = p.add_mutually_exclusive_group()
    path.add_argument("--fast", dest="path", action="store_const", const="fast")
    path.add_argument("--dense", dest="path", action="store_const", const="dense")
    p.add_argument("--verify", action="store_true", help="run both paths and print deviation=<x>")
    p.add_argument("--dense-cap", type=int, default=None)
    p.add_argument("diagram")
    p.set_defaults(handler=cmd_apply, path="fast")

    p = with_seed(commands.add_parser("bench", help="time dense against fast application (CSV)"))
    p.add_argument("--case", type=_bench_case, action="append", help="k,l,n (repeatable)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--dense-cap", type=int, default=None)
    p.set_defaults(handler=cmd_bench)

    p = with_seed(commands.add_parser("check", help="run the property suites"))
    p.add_argument("--suite", action="append", choices=list(SUITES))
    p.add_argument("--group", choices=[g.value for g in GroupTag])
    p.add_argument("--context", choices=[c.value for c in ContextKind])
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(handler=cmd_check)
    return parser


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, NotationError):
        return EXIT_PARSE
    if isinstance(exc, (KindMismatch, KindNotInContext, NotBrauer, NotBrauerGrood, OddDimension)):
        return EXIT_KIND
    if isinstance(exc, ShapeMismatch):
        return EXIT_LENGTH
    if isinstance(exc, SizeLimitExceeded):
        return EXIT_CAP
    return EXIT_INVALID


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID

    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)

    try:
        return args.handler(args)
    except CheckFailed as exc:
        logger.error(f"check failed in suite {exc}")
        return EXIT_CHECK_FAILED
    except ValidationError as exc:
        print(f"error: invalid flags: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DiagramEngineError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
