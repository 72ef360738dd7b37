"""Command line front end.

Subcommands: ``info`` (orders and heights of one group), ``series``
(terms of a functorial series), ``factorize`` (permutable
factorizations), ``verify`` (theorem suites over the corpus, with an
optional report file and figures), ``corpus`` (list the default
corpus).  Figure rendering happens only on the verify report path, so
every other invocation stays matplotlib-free.
"""

from __future__ import annotations

import argparse
import sys

from .builders import build_group, default_corpus
from .errors import FitlabError, LatticeCapExceeded
from .exprs import parse_functorial_expr
from .functorials import UNBOUNDED, gamma_series, named_heights
from .group import DEFAULT_ORDER_CAP
from .groupfile import read_group_file
from .lattice import DEFAULT_LATTICE_CAP, find_factorizations
from .structure import is_soluble
from .theorems import MUTATION_NAMES, THEOREM_IDS, run_verify

__all__ = ["main"]


def _load_group(token: str):
    if token.startswith("file:"):
        return read_group_file(token[len("file:"):])
    return build_group(token)


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _fmt_height(value) -> str:
    if value is None:
        return "n/a (lattice cap)"
    if value == UNBOUNDED:
        return "inf"
    return str(value)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fitlab",
        description="heights and permutable factorizations of finite permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument(
                "--group", required=True,
                help="builtin spec (S4, D6xC2, C2wrC3) or file:PATH",
            )
        p.add_argument("--primes", type=_primes, default=(2, 3, 5, 7))
        p.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)

    p_info = sub.add_parser("info", help="orders, classes and heights of one group")
    common(p_info)

    p_series = sub.add_parser("series", help="terms of a functorial series")
    common(p_series)
    p_series.add_argument("--functorial", required=True, help="expression, e.g. Rp[2]*Fstar*Rp[2]")

    p_fact = sub.add_parser("factorize", help="permutable factorizations of one group")
    common(p_fact)
    mode = p_fact.add_mutually_exclusive_group()
    mode.add_argument("--mutually", action="store_const", const="mutually", dest="mode")
    mode.add_argument("--totally", action="store_const", const="totally", dest="mode")
    mode.add_argument("--all", action="store_const", const="all", dest="mode")
    p_fact.set_defaults(mode="all")

    p_verify = sub.add_parser("verify", help="run theorem suites over the corpus")
    common(p_verify, group=False)
    p_verify.add_argument(
        "--theorem", default="all",
        help="comma-separated suite ids, or 'all' (known: %s)" % ", ".join(THEOREM_IDS),
    )
    p_verify.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--report", help="write the report here, figures alongside")
    p_verify.add_argument(
        "--mutate", action="append", default=[], metavar="NAME",
        help="negative-control hooks (known: %s)" % ", ".join(MUTATION_NAMES),
    )

    p_corpus = sub.add_parser("corpus", help="list the default corpus")
    p_corpus.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)

    return parser


def _cmd_info(args) -> int:
    grp = _load_group(args.group)
    print(f"group {grp.name}")
    print(f"order {grp.order}")
    print(f"degree {grp.degree}")
    print(f"soluble {'yes' if is_soluble(grp) else 'no'}")
    heights = named_heights(grp, primes=args.primes, lattice_cap=args.lattice_cap)
    print(f"h = {_fmt_height(heights.h)}")
    print(f"h* = {_fmt_height(heights.hstar)}")
    print(f"h~ = {_fmt_height(heights.htilde)}")
    for p, lam in heights.lambdas:
        print(f"lambda_{p} = {lam}")
    return 0


def _cmd_series(args) -> int:
    grp = _load_group(args.group)
    gamma = parse_functorial_expr(args.functorial, lattice_cap=args.lattice_cap)
    series = gamma_series(gamma, grp)
    print(f"series {gamma.name} on {grp.name}")
    for i, term in enumerate(series.terms):
        print(f"term {i} order {term.order} {term.name}")
    if series.stalled:
        print("height inf (stalled)")
    else:
        print(f"height {series.height}")
    return 0


def _cmd_factorize(args) -> int:
    grp = _load_group(args.group)
    records = find_factorizations(grp, mode=args.mode, cap=args.lattice_cap)
    print(f"factorizations of {grp.name} mode {args.mode}: {len(records)}")
    for rec in records:
        flags = [
            name
            for name, on in (
                ("product", rec.is_product),
                ("mutually", rec.mutually),
                ("totally", rec.totally),
            )
            if on
        ]
        print(
            f"A = {rec.a.name} (order {rec.a.order})  "
            f"B = {rec.b.name} (order {rec.b.order})  " + " ".join(flags)
        )
    return 0


def _cmd_verify(args) -> int:
    theorems = [t.strip() for t in args.theorem.split(",") if t.strip()]
    verdicts = run_verify(
        theorems=theorems,
        jobs=args.jobs,
        primes=args.primes,
        lattice_cap=args.lattice_cap,
        order_cap=args.order_cap,
        mutations=args.mutate,
    )
    from .report import emit_report, write_figures

    text = emit_report(verdicts, args.report)
    if args.report:
        for path in write_figures(verdicts, args.report):
            print(f"figure {path}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    failed = any(v.status == "fail" for v in verdicts)
    if args.report:
        print(text.rstrip("\n").rsplit("\n", 1)[-1])
    return 1 if failed else 0


def _cmd_corpus(args) -> int:
    specs = default_corpus(args.order_cap)
    for spec in specs:
        print(f"{spec.name} {spec.order}")
    print(f"total {len(specs)}")
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "series": _cmd_series,
    "factorize": _cmd_factorize,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LatticeCapExceeded as exc:
        print(f"fitlab: {exc}", file=sys.stderr)
        return 2
    except FitlabError as exc:
        print(f"fitlab: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fitlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
