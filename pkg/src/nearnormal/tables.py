"""The embedded table of the 179 NN-class representatives (even n <= 30),
and a verifier that rechecks every printed row from first principles."""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass, field
from importlib import resources

from .canon import is_canonical
from .codec import CodecError, NnCode, decode_nn, encode_nn, format_code, parse_code
from .seqcore import alt_sum, seq_sum

# guards against accidental edits of the data file
TABLE1_SHA256 = "fb7628c979927c912d2cc4783adbf669913c995bf74cd530d7683a202e2cf396"

EXPECTED_TOTAL = 179
EXPECTED_COUNTS = dict(
    zip(range(2, 31, 2), (1, 2, 2, 3, 8, 14, 11, 24, 20, 18, 32, 12, 3, 20, 9))
)


@dataclass(frozen=True)
class TableRow:
    n: int
    index: int
    ab_code: str
    cd_code: str
    sums: tuple
    alt_sums: tuple

    @property
    def code(self) -> str:
        return f"{self.ab_code};{self.cd_code}"


_ROWS: list | None = None


def _load() -> list:
    global _ROWS
    if _ROWS is not None:
        return _ROWS
    raw = resources.files("nearnormal.data").joinpath("table1.csv").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != TABLE1_SHA256:
        raise RuntimeError(
            f"table1.csv checksum mismatch ({digest}); the data file was modified"
        )
    rows = []
    for rec in csv.DictReader(raw.decode().splitlines()):
        rows.append(
            TableRow(
                n=int(rec["n"]),
                index=int(rec["index"]),
                ab_code=rec["ab_code"],
                cd_code=rec["cd_code"],
                sums=tuple(int(rec[k]) for k in ("a", "b", "c", "d")),
                alt_sums=tuple(int(rec[k]) for k in ("a*", "b*", "c*", "d*")),
            )
        )
    if len(rows) != EXPECTED_TOTAL:
        raise RuntimeError(f"expected {EXPECTED_TOTAL} table rows, got {len(rows)}")
    _ROWS = rows
    return rows


def table1_rows(n: int | None = None) -> list:
    """The embedded rows, all 179 or those for one n."""
    rows = _load()
    if n is None:
        return list(rows)
    if n not in EXPECTED_COUNTS:
        raise ValueError(f"no table rows for n={n}; even n in 2..30 required")
    return [r for r in rows if r.n == n]


CHECK_NAMES = (
    "parses", "decodes", "canonical", "sums", "alt_sums",
    "sum_of_squares", "round_trip",
)


@dataclass
class RowReport:
    row: TableRow
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.get(name, False) for name in CHECK_NAMES)

    def failed_checks(self) -> list:
        return [name for name in CHECK_NAMES if not self.checks.get(name, False)]


def verify_row(row: TableRow) -> RowReport:
    """Recheck one printed row: parse, decode (near-normal + NPAF
    cancellation), canonical form, both sum columns, the sum-of-squares
    identity, and the encode round-trip."""
    report = RowReport(row)
    checks = report.checks
    try:
        code = parse_code(row.code)
        checks["parses"] = isinstance(code, NnCode) and code.n == row.n
    except CodecError:
        checks["parses"] = False
        return report
    try:
        q = decode_nn(code)
        checks["decodes"] = True
    except CodecError:
        checks["decodes"] = False
        return report
    checks["canonical"] = is_canonical(q)
    checks["sums"] = tuple(seq_sum(s) for s in (q.a, q.b, q.c, q.d)) == row.sums
    checks["alt_sums"] = (
        tuple(alt_sum(s) for s in (q.a, q.b, q.c, q.d)) == row.alt_sums
    )
    total = 2 * (2 * row.n + 1)
    checks["sum_of_squares"] = (
        sum(v * v for v in row.sums) == total
        and sum(v * v for v in row.alt_sums) == total
    )
    checks["round_trip"] = format_code(encode_nn(q)) == row.code
    return report


@dataclass
class TableReport:
    reports: list

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def failures(self) -> list:
        return [r for r in self.reports if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.total - len(self.failures)}/{self.total} rows pass"


def verify_table(n: int | None = None) -> TableReport:
    return TableReport([verify_row(row) for row in table1_rows(n)])
