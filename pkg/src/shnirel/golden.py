"""Reference tables of small octant targets written as sums of two or
three odd sector primes, shipped as package data.

Table 1 holds odd targets with three terms, table 2 even targets with
two. Each stored term is a sector prime plus the unit applied to it; all
summands land in the closed half region and every summand norm stays
below the target norm. The validator re-checks all of that against the
arithmetic core, and the regenerator re-derives each row with the
region searcher.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import IO

from .gaussdecomp import (
    Decomposition,
    NormPolicy,
    find_decomposition,
    verify_decomposition,
)
from .zcore import GaussianInt, Parity, Region, Unit, in_region
from .zcore import parity as parity_of

DATA_RESOURCE = "data/golden_tables.csv"


@dataclass(frozen=True)
class GoldenRow:
    table: int
    target: GaussianInt
    terms: tuple[tuple[GaussianInt, Unit], ...]
    form: str
    note: str

    @property
    def k(self) -> int:
        return len(self.terms)

    def summands(self) -> list[GaussianInt]:
        return [u.apply(g) for g, u in self.terms]

    def to_decomposition(self) -> Decomposition:
        return Decomposition(
            self.target,
            self.terms,
            Region.PRIME_HALF,
            NormPolicy.STRICT_LESS,
            Parity.ODD,
        )


def _parse_rows(text: str) -> tuple[GoldenRow, ...]:
    reader = csv.DictReader(io.StringIO(text))
    rows = []
    for rec in reader:
        terms = []
        for slot in ("t1", "t2", "t3"):
            re_txt = rec[f"{slot}_re"]
            if not re_txt:
                continue
            g = GaussianInt(int(re_txt), int(rec[f"{slot}_im"]))
            terms.append((g, Unit.from_label(rec[f"{slot}_unit"])))
        rows.append(
            GoldenRow(
                int(rec["table"]),
                GaussianInt(int(rec["z_re"]), int(rec["z_im"])),
                tuple(terms),
                rec["form"],
                rec["note"],
            )
        )
    return tuple(rows)


def load_golden() -> tuple[GoldenRow, ...]:
    """The packaged rows, in file order."""
    text = resources.files(__package__).joinpath(DATA_RESOURCE).read_text()
    return _parse_rows(text)


@dataclass(frozen=True)
class GoldenValidation:
    total: int
    failures: tuple[tuple[int, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "ok": self.ok,
            "failures": [{"row": i, "reason": msg} for i, msg in self.failures],
        }


def validate_golden(rows: tuple[GoldenRow, ...] | None = None) -> GoldenValidation:
    """Re-check every stored fact about every row."""
    if rows is None:
        rows = load_golden()
    failures: list[tuple[int, str]] = []
    for i, row in enumerate(rows):
        try:
            if not in_region(row.target, Region.OCTANT):
                raise ValueError(f"target {row.target} outside the octant")
            want = Parity.ODD if row.table == 1 else Parity.EVEN
            if parity_of(row.target) is not want:
                raise ValueError(f"target {row.target} has the wrong parity")
            want_k = 3 if row.table == 1 else 2
            if row.k != want_k:
                raise ValueError(f"expected {want_k} terms, found {row.k}")
            verify_decomposition(row.to_decomposition())
        except ValueError as exc:
            failures.append((i, str(exc)))
    return GoldenValidation(len(rows), tuple(failures))


@dataclass(frozen=True)
class RegenReport:
    """Outcome of re-deriving each row with the region searcher."""

    results: tuple[tuple[GoldenRow, Decomposition | None], ...]

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> tuple[GoldenRow, ...]:
        return tuple(row for row, dec in self.results if dec is None)

    @property
    def matches(self) -> int:
        return sum(
            1
            for row, dec in self.results
            if dec is not None and dec.summands() == row.summands()
        )

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "ok": self.ok,
            "matches": self.matches,
            "failures": [str(row.target) for row in self.failures],
            "rows": [
                {
                    "target": str(row.target),
                    "stored": [str(s) for s in row.summands()],
                    "regenerated": None
                    if dec is None
                    else [str(s) for s in dec.summands()],
                }
                for row, dec in self.results
            ],
        }


def regenerate_tables(rows: tuple[GoldenRow, ...] | None = None) -> RegenReport:
    """Re-derive every row's decomposition under the same constraints:
    half-region primes, norms strictly below the target, at most as many
    terms as the stored row. Witnesses may differ from the stored ones;
    what matters is that each target still decomposes."""
    if rows is None:
        rows = load_golden()
    results = []
    for row in rows:
        dec = find_decomposition(
            row.target,
            Region.PRIME_HALF,
            row.k,
            NormPolicy.STRICT_LESS,
            Parity.ODD,
        )
        if dec is not None:
            verify_decomposition(dec)
        results.append((row, dec))
    return RegenReport(tuple(results))


def write_golden_csv(rows: tuple[GoldenRow, ...], fh: IO[str]) -> None:
    fh.write(
        "table,z_re,z_im,t1_re,t1_im,t1_unit,t2_re,t2_im,t2_unit,"
        "t3_re,t3_im,t3_unit,form,note\n"
    )
    for row in rows:
        cells = [str(row.table), str(row.target.re), str(row.target.im)]
        for pos in range(3):
            if pos < row.k:
                g, u = row.terms[pos]
                cells += [str(g.re), str(g.im), u.label]
            else:
                cells += ["", "", ""]
        cells += [row.form, row.note]
        fh.write(",".join(cells) + "\n")


def write_golden_md(rows: tuple[GoldenRow, ...], fh: IO[str]) -> None:
    fh.write("| table | z | terms | form | note |\n")
    fh.write("|---|---|---|---|---|\n")
    for row in rows:
        dec = row.to_decomposition()
        terms = " + ".join(dec.appendix_terms())
        fh.write(
            f"| {row.table} | {row.target} | {terms} | {row.form} | {row.note} |\n"
        )


def write_golden_json(rows: tuple[GoldenRow, ...], fh: IO[str]) -> None:
    payload = [
        {
            "table": row.table,
            "z": str(row.target),
            "re": row.target.re,
            "im": row.target.im,
            "terms": [
                {"sector": str(g), "unit": u.label, "summand": str(u.apply(g))}
                for g, u in row.terms
            ],
            "form": row.form,
            "note": row.note,
        }
        for row in rows
    ]
    json.dump(payload, fh, sort_keys=True, indent=2)
    fh.write("\n")


__all__ = [
    "DATA_RESOURCE",
    "GoldenRow",
    "GoldenValidation",
    "RegenReport",
    "load_golden",
    "regenerate_tables",
    "validate_golden",
    "write_golden_csv",
    "write_golden_json",
    "write_golden_md",
]
