"""Command-line front end: ``rank``, ``table`` and ``check``."""

from __future__ import annotations

import argparse
import json
import sys

from .core import InconsistencyError
from .dsl import ParseError
from .engine import SizeLimitError
from .report import load_axioms, rank_query

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3


def _err(msg: str):
    print(msg, file=sys.stderr)


def cmd_rank(args) -> int:
    axioms = []
    if args.axioms_file:
        try:
            with open(args.axioms_file, encoding="utf-8") as fh:
                axioms = load_axioms(json.load(fh))
        except (OSError, ValueError) as exc:
            _err(f"error: cannot read axioms from {args.axioms_file}: {exc}")
            return EXIT_FAIL
    try:
        report = rank_query(args.expr, axioms, trace=args.trace)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        _err(f"  {args.expr}")
        _err("  " + " " * exc.offset + "^")
        return EXIT_PARSE
    except InconsistencyError as exc:
        _err(f"inconsistent: {exc}")
        return EXIT_INCONSISTENT
    except (SizeLimitError, ValueError) as exc:
        _err(f"error: {exc}")
        return EXIT_FAIL
    print(report.dumps() if args.json else report.to_text())
    return EXIT_OK


def table_rows(kind: str, max_d: int) -> list[tuple[int, str, str]]:
    from .dsl import parse
    from .engine import infer

    rows = []
    for d in range(1, max_d + 1):
        text = f"Cx(S({d}))" if kind == "spheres" else f"Cx(T({d}))"
        st = infer(parse(text)).root_state
        rows.append((d, str(st.gsr), str(st.csr)))
    return rows


def cmd_table(args) -> int:
    if args.max_d < 1:
        _err("error: --max-d must be at least 1")
        return EXIT_FAIL
    print("d, gsr, csr")
    for d, gsr, csr in table_rows(args.kind, args.max_d):
        print(f"{d}, {gsr}, {csr}")
    return EXIT_OK


def cmd_check(args) -> int:
    from .corpus import run_check

    failures = run_check(args.corpus_size)
    if failures:
        for f in failures:
            _err(f"FAIL {f}")
        _err(f"{len(failures)} check(s) failed")
        return EXIT_FAIL
    print("all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablerank", description="Stable rank bounds for C*-algebra expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="bound tsr, gsr and csr of an expression")
    p.add_argument("expr", help='algebra expression, e.g. "Cx(S(5))"')
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--trace", action="store_true", help="include every derivation step")
    p.add_argument("--axioms-file", metavar="PATH", help="JSON list of extra assertions")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("table", help="print the sphere or torus table")
    p.add_argument("kind", choices=("spheres", "tori"))
    p.add_argument("--max-d", type=int, default=12)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run the built-in consistency corpus")
    p.add_argument("--corpus-size", type=int, default=200, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
