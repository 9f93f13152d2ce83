"""
Command-line interface.

    recurrent check N
    recurrent classify N [--mode MODE]
    recurrent enumerate --limit N [--mode MODE] [--method families|sweep] [--bfile PATH]
    recurrent reconcile --limit N [--mode MODE]
    recurrent density --checkpoints 100,1000,... [--A a --B b] [--plot-dir DIR]
    recurrent bounds-lemma --umax U --xmax X
    recurrent conjecture-pairs --limit L

Exit status: 0 on success, 1 on resource or parse errors, 2 on usage errors.
Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analytics import check_monotone_tail, conjecture_pairs, density_report, lemma_lhs, verify_bounds_lemma
from .arithmetic import MAX_N, factorize
from .classifier import Mode, classify
from .enumerator import (
    BUDGET_ENV,
    default_budget,
    format_bfile,
    generate_families,
    read_bfile,
    reconcile,
    sweep,
)
from .errors import RecurrentError
from .oracle import is_recurrent


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if not 1 <= value <= MAX_N:
        raise argparse.ArgumentTypeError(f"{text} is not in [1, 2^64-1]")
    return value


def _int_list(text):
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write results here instead of stdout")
    common.add_argument("--workers", type=_positive_int, default=1, help="worker processes for sweeps")
    common.add_argument(
        "--budget", type=_positive_int, default=None,
        help=f"largest n a sweep may sieve (default: ${BUDGET_ENV} or 10^7)",
    )

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument(
        "--mode", choices=[m.value for m in Mode], default=Mode.THEOREM_LITERAL.value,
        help="family set used by the classifier",
    )

    parser = argparse.ArgumentParser(prog="recurrent", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the brute-force oracle on N")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("classify", parents=[common, mode], help="family membership of N")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("enumerate", parents=[common, mode], help="recurrent numbers up to a limit")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.add_argument(
        "--method", choices=["families", "sweep"], default="families",
        help="families: generate from the classification (uses --mode); sweep: brute-force oracle",
    )
    p.add_argument("--format", choices=["plain", "bfile", "json"], default="plain")
    p.add_argument("--bfile", type=Path, help="also write a b-file to this path")
    p.add_argument("--start-index", type=_positive_int, default=1, help="first b-file index")
    p.add_argument("--compare", type=Path, help="compare against a local b-file")
    p.add_argument("--plot", type=Path, help="sweep method only: write an s(n) histogram")

    p = sub.add_parser("reconcile", parents=[common, mode], help="oracle vs. classifier disagreements")
    p.add_argument("--limit", type=_positive_int, required=True)

    p = sub.add_parser("density", parents=[common], help="f(x), pi_k(x) and ratio table")
    p.add_argument("--checkpoints", type=_int_list, required=True, help="comma separated, ascending")
    p.add_argument("--A", type=float, dest="A", help="Hardy-Ramanujan constant A")
    p.add_argument("--B", type=float, dest="B", help="Hardy-Ramanujan constant B")
    p.add_argument("--source", type=Path, help="b-file of recurrent numbers instead of sweeping")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--plot-dir", type=Path, help="write figures into this directory")

    p = sub.add_parser("bounds-lemma", parents=[common], help="exact check of the quintic inequality")
    p.add_argument("--umax", type=_positive_int, required=True)
    p.add_argument("--xmax", type=_positive_int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("conjecture-pairs", parents=[common], help="primes p<q<p^2 with (p^2-q)|(q-p)")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    return parser


def _emit(args, text):
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _budget(args):
    return args.budget if args.budget is not None else default_budget()


def _cmd_check(args):
    v = is_recurrent(args.n)
    text = json.dumps(v.to_dict()) if args.format == "json" else v.describe()
    _emit(args, text + "\n")


def _cmd_classify(args):
    c = classify(factorize(args.n), args.mode)
    text = json.dumps(c.to_dict()) if args.format == "json" else c.describe()
    _emit(args, text + "\n")


def _cmd_enumerate(args):
    if args.method == "sweep":
        result = sweep(1, args.limit, budget=_budget(args), workers=args.workers)
        values = list(result.recurrent)
        if args.plot:
            from .plotting import plot_s_histogram

            plot_s_histogram(result, args.plot)
    else:
        values = generate_families(args.limit, args.mode)
    if args.format == "bfile":
        text = format_bfile(values, args.start_index)
    elif args.format == "json":
        text = json.dumps(values) + "\n"
    else:
        text = "".join(f"{v}\n" for v in values)
    _emit(args, text)
    if args.bfile is not None:
        args.bfile.parent.mkdir(parents=True, exist_ok=True)
        args.bfile.write_bytes(format_bfile(values, args.start_index).encode("ascii"))
    if args.compare is not None:
        reference = read_bfile(args.compare)
        upto = [v for v in reference if v <= args.limit]
        if upto == values:
            print(f"compare: {len(values)} terms match {args.compare}", file=sys.stderr)
        else:
            i = next((i for i, (a, b) in enumerate(zip(upto, values)) if a != b), min(len(upto), len(values)))
            print(f"compare: first difference at position {i + args.start_index}", file=sys.stderr)


def _cmd_reconcile(args):
    records = reconcile(args.limit, args.mode, budget=_budget(args), workers=args.workers)
    _emit(args, "".join(r.to_json() + "\n" for r in records))


def _cmd_density(args):
    if args.source is not None:
        source = read_bfile(args.source)
    else:
        source = sweep(1, max(args.checkpoints), budget=_budget(args), workers=args.workers)
    report = density_report(args.checkpoints, source, A=args.A, B=args.B)
    _emit(args, report.to_csv() if args.format == "csv" else report.to_json() + "\n")
    if args.plot_dir is not None:
        from .plotting import density_figures

        for path in density_figures(report, args.plot_dir):
            print(f"wrote {path}", file=sys.stderr)


def _cmd_bounds_lemma(args):
    if args.xmax < 2:
        raise RecurrentError("--xmax must be at least 2")
    pairs = verify_bounds_lemma(args.umax, args.xmax)
    mono = check_monotone_tail(args.umax, args.xmax) if args.umax >= 4 else None
    if args.format == "json":
        payload = {
            "umax": args.umax,
            "xmax": args.xmax,
            "satisfying": [list(p) for p in pairs],
            "values": {f"{u},{x}": str(lemma_lhs(u, x)) for u, x in pairs},
            "monotone_tail_ok": None if mono is None else mono.ok,
        }
        _emit(args, json.dumps(payload) + "\n")
        return
    lines = [f"satisfying pairs (u,x): {pairs}"]
    lines += [f"  u={u} x={x}: lhs={lemma_lhs(u, x)} rhs={x * x + 1}" for u, x in pairs]
    if mono is not None:
        lines.append(mono.describe())
    _emit(args, "\n".join(lines) + "\n")


def _cmd_conjecture_pairs(args):
    pairs = conjecture_pairs(args.limit)
    if args.format == "json":
        _emit(args, json.dumps([list(p) for p in pairs]) + "\n")
    else:
        _emit(args, "".join(f"{p} {q}\n" for p, q in pairs))


_COMMANDS = {
    "check": _cmd_check,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "reconcile": _cmd_reconcile,
    "density": _cmd_density,
    "bounds-lemma": _cmd_bounds_lemma,
    "conjecture-pairs": _cmd_conjecture_pairs,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except (RecurrentError, OSError) as exc:
        print(f"recurrent {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
