"""Command line interface.

Subcommands: sieve, decompose, solve-thm1, solve-thm2, solve-conj1,
scan, obstruction, hypotheses, thm130, tables. Every reporting command
takes --format csv|json|md and --out FILE, writes the payload there,
and prints a one-line summary on stderr. Exit codes: 0 on success, 1
when the data says no (no decomposition, exceptions found, validation
failures), 2 for unusable arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO, Callable

from . import golden as golden_mod
from .diophantine import (
    BoundExceeded,
    solve_four_columns,
    solve_min_columns,
    solve_square_columns,
    write_matrix_csv,
    write_matrix_json,
)
from .gaussdecomp import (
    BaseCaseError,
    NormPolicy,
    find_decomposition,
    four_term_decompose,
    scan_box,
    verify_diagonal_obstruction,
    write_decomposition_csv,
    write_obstruction_csv,
    write_obstruction_json,
    write_scan_csv,
    write_scan_json,
)
from .primes import CACHE_ENV, ensure_table
from .ratdecomp import (
    HYPOTHESES,
    HypothesisViolation,
    SearchExhausted,
    hypothesis_scan,
    residue34_chain,
)
from .zcore import GaussianInt, Region

FORMATS = ("md", "csv", "json")
PRIME_REGIONS = (
    Region.PRIME_SECTOR.value,
    Region.PRIME_QUADRANT.value,
    Region.PRIME_HALF.value,
)


def parse_gaussian(text: str) -> GaussianInt:
    """Accept 'RE,IM' or a bare integer."""
    if "," in text:
        a, _, b = text.partition(",")
        return GaussianInt(int(a), int(b))
    return GaussianInt(int(text), 0)


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like LO..HI, got {text!r}")
    return int(lo), int(hi)


def _summary(line: str) -> None:
    print(line, file=sys.stderr)


def _emit(args, renderers: dict) -> None:
    render = renderers[args.format]
    if args.out:
        with open(args.out, "w") as fh:
            render(fh)
    else:
        render(sys.stdout)


def _json_writer(obj) -> Callable[[IO[str]], None]:
    def write(fh: IO[str]) -> None:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")

    return write


def _lines_writer(lines: list[str]) -> Callable[[IO[str]], None]:
    def write(fh: IO[str]) -> None:
        for line in lines:
            fh.write(line + "\n")

    return write


def _matrix_md(matrix) -> list[str]:
    head = f"kind {matrix.kind.value}"
    if matrix.case is not None:
        head += f", case {matrix.case}"
    head += f": a={matrix.a}, b={matrix.b}, k={matrix.k}"
    lines = [head, "", "| target | x1 | x2 |", "|---|---|---|"]
    for t, x1, x2 in matrix.columns():
        lines.append(f"| {t} | {x1} | {x2} |")
    return lines


def _decomposition_md(dec) -> list[str]:
    lines = [
        f"{dec.target} = {dec}",
        f"k={dec.k} region={dec.region.value} policy={dec.policy.value}",
        "",
        "| summand | norm | unit | sector |",
        "|---|---|---|---|",
    ]
    for g, u in dec.terms:
        lines.append(f"| {u.apply(g)} | {g.norm()} | {u.label} | {g} |")
    return lines


def _scan_md(report) -> list[str]:
    exceptions = report.exceptions
    lines = [
        f"targets {report.target_desc}, primes {report.term_region.value}, "
        f"max terms {report.max_terms}, policy {report.policy.value}: "
        f"{len(report.rows)} targets, {len(exceptions)} unrepresentable",
        "",
        "| z | norm | k | witness |",
        "|---|---|---|---|",
    ]
    for z, k, wit in report.rows:
        cell = "EMPTY" if wit is None else " + ".join(f"({s})" for s in wit)
        lines.append(f"| {z} | {z.norm()} | {'' if k is None else k} | {cell} |")
    return lines


def _obstruction_md(report) -> list[str]:
    lines = [
        f"bound {report.bound}, up to {report.max_terms} terms: "
        + ("inequality holds" if report.holds else "VIOLATED"),
        "",
        "| k | count | min re-im |",
        "|---|---|---|",
    ]
    for k, c, g in report.levels:
        lines.append(f"| {k} | {c} | {g} |")
    for k, z in report.violations:
        lines.append(f"violation at k={k}: {z}")
    return lines


def _hypothesis_md(report) -> list[str]:
    spec = report.spec
    exc = ", ".join(str(n) for n in report.exceptions) or "none"
    return [
        f"hypothesis {spec.index} (n = {spec.residue} mod 4, k = {spec.k}) "
        f"over [{report.lo}, {report.hi}]: "
        f"{len(report.rows)} targets, exceptions: {exc}, "
        f"max exception: {report.max_exception}, "
        f"c0 candidate: {report.c0_candidate}"
    ]


def cmd_sieve(args) -> int:
    table = ensure_table(args.limit, args.cache)
    primes = table.primes if args.mod4 is None else table.residue_class(args.mod4)
    primes = [p for p in primes if p <= args.limit]
    summary = {
        "limit": args.limit,
        "count": len(primes),
        "largest": primes[-1] if primes else None,
        "cache": args.cache,
        "mod4": args.mod4,
    }
    if args.list:
        _emit(
            args,
            {
                "md": _lines_writer([str(p) for p in primes]),
                "csv": _lines_writer(["n"] + [str(p) for p in primes]),
                "json": _json_writer(primes),
            },
        )
    else:
        _emit(
            args,
            {
                "md": _lines_writer(
                    [
                        f"{summary['count']} primes up to {args.limit}"
                        + (f" (mod 4 = {args.mod4})" if args.mod4 is not None else "")
                        + (f", cache {args.cache}" if args.cache else "")
                    ]
                ),
                "csv": _lines_writer(
                    ["limit,count,largest", f"{args.limit},{summary['count']},{summary['largest']}"]
                ),
                "json": _json_writer(summary),
            },
        )
    _summary(f"primes: {summary['count']} up to {args.limit}")
    return 0


def cmd_decompose(args) -> int:
    z = parse_gaussian(args.z)
    region = Region(args.primes)
    policy = NormPolicy.STRICT_LESS if args.strict_norm else NormPolicy.NONE
    if args.chain:
        got = four_term_decompose(z, region, policy=policy)
        if got is None:
            _summary(f"{z}: no split into at most four primes; counterexample candidate")
            return 1
        dec, route = got
        payload = dec.to_json_dict()
        payload["route"] = route
        _emit(
            args,
            {
                "md": _lines_writer(_decomposition_md(dec) + [f"route: {route}"]),
                "csv": lambda fh: write_decomposition_csv(dec, fh),
                "json": _json_writer(payload),
            },
        )
        _summary(f"terms: {dec.k}, route: {route}")
        return 0
    dec = find_decomposition(
        z, region, args.max_terms, policy, include_single=not args.no_single
    )
    if dec is None:
        _summary(f"{z}: no decomposition into at most {args.max_terms} terms")
        return 1
    _emit(
        args,
        {
            "md": _lines_writer(_decomposition_md(dec)),
            "csv": lambda fh: write_decomposition_csv(dec, fh),
            "json": _json_writer(dec.to_json_dict()),
        },
    )
    note = " (single: the target itself is prime)" if dec.k == 1 else ""
    _summary(f"terms: {dec.k}{note}")
    return 0


def _emit_matrix(args, matrix) -> int:
    matrix.validate()
    _emit(
        args,
        {
            "md": _lines_writer(_matrix_md(matrix)),
            "csv": lambda fh: write_matrix_csv(matrix, fh),
            "json": lambda fh: write_matrix_json(matrix, fh),
        },
    )
    case = "" if matrix.case is None else f", case {matrix.case}"
    _summary(f"columns: {matrix.k}{case}")
    return 0


def cmd_solve_thm1(args) -> int:
    return _emit_matrix(args, solve_four_columns(args.a, args.b))


def cmd_solve_thm2(args) -> int:
    return _emit_matrix(args, solve_min_columns(args.a, args.b, args.kmax))


def cmd_solve_conj1(args) -> int:
    return _emit_matrix(args, solve_square_columns(args.a, args.b, args.kmax))


def cmd_scan(args) -> int:
    policy = NormPolicy.STRICT_LESS if args.strict_norm else NormPolicy.NONE
    report = scan_box(
        Region(args.targets),
        parse_range(args.re),
        parse_range(args.im),
        Region(args.primes),
        args.max_terms,
        policy,
        min_max_component=args.min_max_component,
        jobs=args.jobs,
    )
    _emit(
        args,
        {
            "md": _lines_writer(_scan_md(report)),
            "csv": lambda fh: write_scan_csv(report, fh),
            "json": lambda fh: write_scan_json(report, fh),
        },
    )
    _summary(f"targets: {len(report.rows)}, exceptions: {len(report.exceptions)}")
    return 1 if report.exceptions else 0


def cmd_obstruction(args) -> int:
    report = verify_diagonal_obstruction(args.bound, args.max_terms)
    _emit(
        args,
        {
            "md": _lines_writer(_obstruction_md(report)),
            "csv": lambda fh: write_obstruction_csv(report, fh),
            "json": lambda fh: write_obstruction_json(report, fh),
        },
    )
    _summary(
        f"bound {report.bound}: "
        + ("inequality holds" if report.holds else f"{len(report.violations)} violations")
    )
    return 0 if report.holds else 1


def cmd_hypotheses(args) -> int:
    indices = [args.index] if args.index is not None else sorted(HYPOTHESES)
    reports = [hypothesis_scan(i, 1, args.upper) for i in indices]

    def csv_writer(fh: IO[str]) -> None:
        fh.write("n,residue,k,witness\n")
        for report in reports:
            for n, wit in report.rows:
                cell = "EMPTY" if wit is None else "+".join(str(p) for p in wit)
                fh.write(f"{n},{report.spec.residue},{report.spec.k},{cell}\n")

    md_lines: list[str] = []
    for report in reports:
        md_lines.extend(_hypothesis_md(report))
    _emit(
        args,
        {
            "md": _lines_writer(md_lines),
            "csv": csv_writer,
            "json": _json_writer([r.to_json_dict() for r in reports]),
        },
    )
    _summary(
        "; ".join(
            f"hypothesis {r.spec.index}: c0 candidate {r.c0_candidate}" for r in reports
        )
    )
    return 1 if any(r.exceptions for r in reports) else 0


def cmd_thm130(args) -> int:
    result = residue34_chain(args.n, args.c0 + 9)
    terms = "+".join(str(t) for t in result.terms)
    _emit(
        args,
        {
            "md": _lines_writer(
                [
                    f"{result.n} = {' + '.join(str(t) for t in result.terms)} "
                    f"(m={result.m})"
                ]
            ),
            "csv": _lines_writer(["n,m,witness", f"{result.n},{result.m},{terms}"]),
            "json": _json_writer(result.to_json_dict()),
        },
    )
    _summary(f"{result.n}: {result.m} primes of the form 4t+3")
    return 0


def cmd_tables(args) -> int:
    rows = golden_mod.load_golden()
    if args.regenerate:
        report = golden_mod.regenerate_tables(rows)
        lines = [
            f"{report.total} rows, {report.total - len(report.failures)} regenerated, "
            f"{report.matches} match the stored witnesses"
        ]
        for row in report.failures:
            lines.append(f"failed: {row.target}")

        def csv_writer(fh: IO[str]) -> None:
            fh.write("target,stored,regenerated\n")
            for row, dec in report.results:
                stored = "+".join(f"({s})" for s in row.summands())
                regen = (
                    "" if dec is None else "+".join(f"({s})" for s in dec.summands())
                )
                fh.write(f"{row.target},{stored},{regen}\n")

        _emit(
            args,
            {
                "md": _lines_writer(lines),
                "csv": csv_writer,
                "json": _json_writer(report.to_json_dict()),
            },
        )
        _summary(
            f"rows: {report.total}, regenerated: {report.total - len(report.failures)}, "
            f"failures: {len(report.failures)}"
        )
        return 0 if report.ok else 1
    validation = golden_mod.validate_golden(rows)
    typos = sum(1 for row in rows if row.note)
    lines = [f"{validation.total} rows, {len(validation.failures)} failures"]
    for i, reason in validation.failures:
        lines.append(f"row {i}: {reason}")

    def csv_writer(fh: IO[str]) -> None:
        fh.write("row,reason\n")
        for i, reason in validation.failures:
            fh.write(f"{i},{reason}\n")

    _emit(
        args,
        {
            "md": _lines_writer(lines),
            "csv": csv_writer,
            "json": _json_writer(validation.to_json_dict()),
        },
    )
    _summary(
        f"rows: {validation.total - len(validation.failures)} passed, "
        f"{len(validation.failures)} failed, {typos} annotated typos"
    )
    return 0 if validation.ok else 1


def _add_output_options(sub) -> None:
    sub.add_argument("--format", choices=FORMATS, default="md")
    sub.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shnirel",
        description="Additive prime decompositions over the rational and Gaussian integers",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    region_values = [r.value for r in Region]

    sieve = commands.add_parser("sieve", help="build or refresh the rational prime table")
    sieve.add_argument("--limit", type=int, required=True)
    sieve.add_argument(
        "--cache",
        default=os.environ.get(CACHE_ENV),
        help=f"prime cache file (default from ${CACHE_ENV})",
    )
    sieve.add_argument("--mod4", type=int, choices=(1, 3), default=None)
    sieve.add_argument("--list", action="store_true", help="print the primes themselves")
    _add_output_options(sieve)
    sieve.set_defaults(func=cmd_sieve)

    dec = commands.add_parser("decompose", help="decompose a Gaussian integer into region primes")
    dec.add_argument("--z", required=True, help="Gaussian integer as RE,IM or a bare integer")
    dec.add_argument("--primes", choices=PRIME_REGIONS, default=Region.PRIME_SECTOR.value)
    dec.add_argument("--max-terms", type=int, default=3)
    dec.add_argument(
        "--strict-norm",
        action="store_true",
        help="every summand norm must stay below the target norm",
    )
    dec.add_argument(
        "--no-single",
        action="store_true",
        help="do not report a prime target as its own one-term sum",
    )
    dec.add_argument(
        "--chain",
        action="store_true",
        help="use the shift-by-an-inert-prime route for even targets",
    )
    _add_output_options(dec)
    dec.set_defaults(func=cmd_decompose)

    thm1 = commands.add_parser("solve-thm1", help="four prime columns with row sums a, b")
    thm1.add_argument("--a", type=int, required=True)
    thm1.add_argument("--b", type=int, required=True)
    _add_output_options(thm1)
    thm1.set_defaults(func=cmd_solve_thm1)

    thm2 = commands.add_parser("solve-thm2", help="fewest prime columns with row sums a, b")
    thm2.add_argument("--a", type=int, required=True)
    thm2.add_argument("--b", type=int, required=True)
    thm2.add_argument("--kmax", type=int, default=8)
    _add_output_options(thm2)
    thm2.set_defaults(func=cmd_solve_thm2)

    conj1 = commands.add_parser(
        "solve-conj1", help="Gaussian prime columns with square targets and row sums a, b"
    )
    conj1.add_argument("--a", type=int, required=True)
    conj1.add_argument("--b", type=int, required=True)
    conj1.add_argument("--kmax", type=int, default=6)
    _add_output_options(conj1)
    conj1.set_defaults(func=cmd_solve_conj1)

    scan = commands.add_parser("scan", help="decompose every target in a component box")
    scan.add_argument("--targets", choices=region_values, required=True)
    scan.add_argument("--re", required=True, help="real part range as LO..HI")
    scan.add_argument("--im", required=True, help="imaginary part range as LO..HI")
    scan.add_argument("--primes", choices=PRIME_REGIONS, required=True)
    scan.add_argument("--max-terms", type=int, default=3)
    scan.add_argument("--strict-norm", action="store_true")
    scan.add_argument(
        "--min-max-component",
        type=int,
        default=0,
        help="skip targets whose larger component is below this",
    )
    scan.add_argument("--jobs", type=int, default=1)
    _add_output_options(scan)
    scan.set_defaults(func=cmd_scan)

    obs = commands.add_parser(
        "obstruction", help="exhaustively confirm the diagonal gap of sector prime sums"
    )
    obs.add_argument("--bound", type=int, required=True, help="largest real part to sweep")
    obs.add_argument("--max-terms", type=int, default=6)
    _add_output_options(obs)
    obs.set_defaults(func=cmd_obstruction)

    hyp = commands.add_parser(
        "hypotheses", help="scan the residue-class splits into primes of the form 4t+3"
    )
    hyp.add_argument("--index", type=int, choices=sorted(HYPOTHESES), default=None)
    hyp.add_argument("--upper", type=int, required=True, help="scan n from 1 to this bound")
    _add_output_options(hyp)
    hyp.set_defaults(func=cmd_hypotheses)

    chain = commands.add_parser(
        "thm130", help="write n as two to six primes of the form 4t+3"
    )
    chain.add_argument("--n", type=int, required=True)
    chain.add_argument(
        "--c0", type=int, default=9, help="empirical threshold constant; n must reach c0+9"
    )
    _add_output_options(chain)
    chain.set_defaults(func=cmd_thm130)

    tables = commands.add_parser("tables", help="validate or regenerate the reference tables")
    mode = tables.add_mutually_exclusive_group()
    mode.add_argument("--validate", action="store_true", help="check every stored row")
    mode.add_argument("--regenerate", action="store_true", help="re-derive every row")
    _add_output_options(tables)
    tables.set_defaults(func=cmd_tables)

    return parser


def entry(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SearchExhausted, HypothesisViolation, BaseCaseError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ValueError, BoundExceeded, OverflowError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(entry())
