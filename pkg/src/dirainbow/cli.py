"""Command-line front end.

Machine-readable ``key value...`` lines go to stdout, human notes to stderr.
Exit codes: 0 success or verified, 1 falsified property, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import cactus, families
from .coloring import Coloring, ParamKind
from .errors import BudgetExceeded, RainbowError
from .io import format_coloring, format_digraph, parse_coloring, parse_digraph
from .solver import SolveBudget, exact
from .suite import CRITERIA, SuiteConfig, run_suite
from .verify import check_connected

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _kind(text: str) -> ParamKind:
    try:
        return ParamKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _note(text: str) -> None:
    print(text, file=sys.stderr)


# ---------------------------------------------------------------- commands


def cmd_compute(args) -> int:
    parsed = parse_digraph(_read(args.input))
    budget = SolveBudget(args.max_elements, args.max_nodes, args.max_time)
    result = exact(parsed.digraph, args.kind, budget)
    print(result.summary())
    if args.witness:
        _write(args.witness, format_coloring(result.witness))
    _note(f"{args.kind.value} = {result.value} after {result.stats.nodes} search nodes in {result.stats.elapsed:.3f}s")
    return EXIT_OK


def cmd_verify(args) -> int:
    parsed = parse_digraph(_read(args.input))
    c = parse_coloring(_read(args.coloring), parsed.labels)
    report = check_connected(parsed.digraph, c, args.kind)
    if report.ok:
        print("ok")
        print(f"colors {c.color_count}")
        return EXIT_OK
    u, v = report.failing_pair
    print(f"fail {parsed.labels[u]} {parsed.labels[v]}")
    print(f"colors {c.color_count}")
    _note(f"no {args.kind.value}-rainbow route from {parsed.labels[u]} to {parsed.labels[v]}")
    return EXIT_FALSIFIED


def cmd_family(args) -> int:
    spec = families.FamilySpec.parse(args.name, args.params or "")
    D = families.make(spec)
    _write(args.output, format_digraph(D))
    if args.with_coloring:
        c = families.coloring_for(spec)
        kind = families.SCHEME_KIND[spec.name]
        text = format_coloring(c)
        if args.coloring_output:
            _write(args.coloring_output, text)
        else:
            sys.stdout.write(f"# coloring {kind.value}\n{text}")
        _note(f"{spec.name}: {c.color_count}-color {kind.value} scheme")
    return EXIT_OK


def _bound_text(value: float) -> str:
    return "inf" if math.isinf(value) else str(int(value))


def cmd_cactus(args) -> int:
    if args.qnql:
        try:
            n, q, l, variant = args.qnql.split(",")
            inst = cactus.build_Qnql(int(n), int(q), int(l), variant)
        except ValueError:
            raise UsageError("--qnql expects n,q,l,variant (variant: base, odd or mod2)") from None
        D = inst.digraph
        _write(args.output, format_digraph(D))
    else:
        inst = None
        D = parse_digraph(_read(args.input)).digraph
    try:
        Q = cactus.decompose(D)
    except RainbowError as exc:
        print("is_cactus false")
        print(f"reason {type(exc).__name__} {exc}")
        return EXIT_OK
    prof = cactus.profile(Q)
    print("is_cactus true")
    print(f"q {Q.q}")
    print("cut_vertices " + " ".join(str(v) for v in sorted(Q.cut_vertices)))
    for i, H in enumerate(Q.cycles, start=1):
        print(f"cycle {i} " + " ".join(map(str, H)))
    print("block_edges " + " ".join(f"{i + 1}-{j + 1}" for i, j in Q.block_graph))
    print(f"special_path {str(prof.is_special_path).lower()}")
    print(f"min_cut_distance {_bound_text(prof.min_cut_distance)}")
    print(f"kq_independent {str(prof.kq_independent).lower()}")
    for name, (low, high) in cactus.formula_bounds(Q).items():
        print(f"bounds {name} {low} {high}")
    print(f"lower_bound rvc {cactus.lower_bounds(Q, ParamKind.RVC)}")
    print(f"lower_bound trc {cactus.lower_bounds(Q, ParamKind.TRC)}")
    if args.colorings:
        shown: list[tuple[str, Coloring]] = []
        if inst is not None:
            if inst.rvc is not None:
                shown.append(("RVC", inst.rvc))
            shown.append(("TRC", inst.trc))
        elif Q.q >= 2:
            mode = "optimal" if prof.min_cut_distance >= 3 else "upper"
            shown.append(("RVC", cactus.rvc_coloring(Q, mode)))
            shown.append(("TRC", cactus.trc_coloring(Q)))
        for kind, c in shown:
            ok = check_connected(D, c, ParamKind(kind)).ok
            print(f"# coloring {kind} {'ok' if ok else 'fail'}")
            sys.stdout.write(format_coloring(c))
    return EXIT_OK


def _only(text: str | None) -> set[int] | None:
    if not text:
        return None
    try:
        wanted = {int(t) for t in text.split(",")}
    except ValueError:
        raise UsageError("--only expects comma-separated criterion numbers") from None
    known = {c.number for c in CRITERIA}
    if not wanted <= known:
        raise UsageError(f"unknown criteria {sorted(wanted - known)}")
    return wanted


def cmd_check(args) -> int:
    cfg = SuiteConfig(seed=args.seed, max_n=args.max_n, max_elements=args.max_elements)
    only = _only(args.only)
    print(f"seed {cfg.seed}")
    passed = total = 0
    for result in run_suite(cfg, only):
        print(result.line(), flush=True)
        total += 1
        passed += result.passed
    print(f"summary {passed}/{total} pass")
    return EXIT_OK if passed == total else EXIT_FALSIFIED


# ---------------------------------------------------------------- parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirainbow", description="Rainbow connection parameters of digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact value of a parameter")
    p.add_argument("--kind", type=_kind, required=True, help="rc, src, rvc, srvc, trc or strc")
    p.add_argument("--input", required=True, help="digraph file ('-' for stdin)")
    p.add_argument("--max-elements", type=_positive, help="element cap (default from RAINBOW_BUDGET_ELEMENTS or built in)")
    p.add_argument("--max-nodes", type=_positive, help="search node cap")
    p.add_argument("--max-time", type=float, help="time cap in seconds")
    p.add_argument("--witness", help="write the optimal coloring to this file ('-' for stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("--kind", type=_kind, required=True)
    p.add_argument("--input", required=True, help="digraph file")
    p.add_argument("--coloring", required=True, help="coloring file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit a family instance")
    p.add_argument("--name", required=True, choices=families.FAMILY_NAMES)
    p.add_argument("--params", default="", help="k=v,... (lists as 2-2-3)")
    p.add_argument("--with-coloring", action="store_true", help="also emit the explicit coloring scheme")
    p.add_argument("--output", help="digraph file (default stdout)")
    p.add_argument("--coloring-output", help="coloring file (default stdout, after the digraph)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("cactus", help="cactus recognition and profile")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="digraph file")
    src.add_argument("--qnql", help="build Q(n,q,l): n,q,l,variant")
    p.add_argument("--output", help="with --qnql, write the digraph here (default stdout)")
    p.add_argument("--colorings", action="store_true", help="print witness colorings")
    p.set_defaults(func=cmd_cactus)

    p = sub.add_parser("check", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=_positive, help="cap instance sizes of the random suites")
    p.add_argument("--max-elements", type=_positive, help="override every element cap")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget_exceeded {exc}")
        return EXIT_USAGE
    except (UsageError, RainbowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
