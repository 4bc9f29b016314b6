"""Batch command-line front door.

Exit codes: 0 = all asserted checks passed, 1 = at least one asserted check
failed, 2 = usage or parse error.  Informational findings never affect the
exit status.
"""

from __future__ import annotations

import argparse
import sys

from .algfile import AlgebraFile, render_algebra_file
from .bunch import RRhoAlgebra, bracket_rho
from .catalog import build_entry, catalog_names
from .core import WorkbenchError
from .findings import render_findings
from .jordan import MODE_FULL, MODE_REDUCED, check_triple_myb_raw, derived_triple
from .lie import convert_params, convert_params_inverse, derived_bracket
from .searches import run_search
from .suites import SUITES, load_input, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opalg",
        description="Exact verification workbench for Lie algebras and Jordan "
        "triple systems with operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a named check suite")
    check.add_argument("input", help="algebra file path or catalog:NAME[?params]")
    check.add_argument("--suite", required=True, choices=sorted(SUITES))
    check.add_argument("--operator", help="primary operator name (suite-dependent default)")
    check.add_argument("--operator2", help="secondary operator name")
    check.add_argument("--variant", help="triple-system identity variant (jacobson|alternate)")
    check.add_argument("--force", action="store_true", help="override the dimension guard")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--out", help="write the report to a file instead of stdout")

    derive = sub.add_parser("derive", help="compute a derived structure and write it out")
    derive.add_argument("input")
    derive.add_argument(
        "--what",
        required=True,
        choices=("derived-bracket", "quadratic-bracket", "derived-triple"),
    )
    derive.add_argument("--mode", choices=(MODE_FULL, MODE_REDUCED), default=MODE_REDUCED)
    derive.add_argument("--operator", default="R")
    derive.add_argument("--operator2", default="rho")
    derive.add_argument("--force", action="store_true")
    derive.add_argument("--out", help="output file (stdout when omitted)")

    catalog = sub.add_parser("catalog", help="list or export catalog entries")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True)
    catalog_sub.add_parser("list")
    export = catalog_sub.add_parser("export")
    export.add_argument("name", help="catalog name, e.g. example2-gl2?q=diag:1,2")
    export.add_argument("--out")

    search = sub.add_parser("search", help="seeded search for failure witnesses")
    search.add_argument("target")
    search.add_argument("--seed", type=int, required=True)
    search.add_argument("--trials", type=int, required=True)
    search.add_argument("--dim", type=int)
    search.add_argument("--entry-bound", type=int, default=3)
    search.add_argument("--format", choices=("text", "json"), default="json")
    search.add_argument("--out")

    convert = sub.add_parser("convert", help="convert between (R1,R2) and (R,xi) operator pairs")
    convert.add_argument("input")
    convert.add_argument("--to", required=True, choices=("xi", "pair"))
    convert.add_argument("--operator", help="first operator name (default R1, or R for --to pair)")
    convert.add_argument("--operator2", help="second operator name (default R2, or xi)")
    convert.add_argument("--out")

    findings = sub.add_parser("findings", help="emit the open-questions findings document")
    findings.add_argument("--out")

    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    options = {}
    if args.operator:
        options["operator"] = args.operator
    if args.operator2:
        options["operator2"] = args.operator2
    if args.variant:
        options["variant"] = args.variant
    if args.force:
        options["force"] = True
    report = run_suite(args.input, args.suite, options)
    _write(report.to_json() if args.format == "json" else report.to_text(), args.out)
    return report.exit_code()


def _cmd_derive(args) -> int:
    af, _ = load_input(args.input)
    if args.what == "derived-bracket":
        out = AlgebraFile(
            af.dimension,
            af.basis_names,
            derived_bracket(af.require_bracket(), af.require_operator(args.operator)),
        )
    elif args.what == "quadratic-bracket":
        a = RRhoAlgebra(
            af.require_bracket(),
            af.require_operator(args.operator),
            af.require_operator(args.operator2),
        )
        out = AlgebraFile(af.dimension, af.basis_names, bracket_rho(a))
    else:
        triple = af.require_triple()
        op = af.require_operator(args.operator)
        if args.mode == MODE_REDUCED and not args.force:
            myb = check_triple_myb_raw(triple, op)
            if not myb.passed:
                raise WorkbenchError(
                    "reduced mode requires the triple mYB identity (fails at "
                    f"{myb.witness.indices}); rerun with --force or --mode full"
                )
        out = AlgebraFile(
            af.dimension, af.basis_names, triple=derived_triple(triple, op, args.mode)
        )
    _write(render_algebra_file(out), args.out)
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        for name in catalog_names():
            sys.stdout.write(name + "\n")
        return 0
    from .algfile import entry_to_algebra_file

    entry = build_entry(args.name)
    _write(render_algebra_file(entry_to_algebra_file(entry)), args.out)
    return 0


def _cmd_search(args) -> int:
    report = run_search(args.target, args.seed, args.trials, args.dim, args.entry_bound)
    _write(report.to_json() if args.format == "json" else report.to_text(), args.out)
    return 0


def _cmd_convert(args) -> int:
    af, _ = load_input(args.input)
    if args.to == "xi":
        first = args.operator or "R1"
        second = args.operator2 or "R2"
        R, xi = convert_params(af.require_operator(first), af.require_operator(second))
        operators = {"R": R, "xi": xi}
    else:
        first = args.operator or "R"
        second = args.operator2 or "xi"
        R1, R2 = convert_params_inverse(af.require_operator(first), af.require_operator(second))
        operators = {"R1": R1, "R2": R2}
    out = AlgebraFile(af.dimension, af.basis_names, af.bracket, af.triple, operators)
    _write(render_algebra_file(out), args.out)
    return 0


def _cmd_findings(args) -> int:
    _write(render_findings(), args.out)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "derive": _cmd_derive,
    "catalog": _cmd_catalog,
    "search": _cmd_search,
    "convert": _cmd_convert,
    "findings": _cmd_findings,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except (WorkbenchError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
