"""Recompute the bundled table from scratch and diff it cell by cell."""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import check_sigma_int, model_label
from .covering import genus, is_arithmetic, primitive_dimensions
from .dataset import DatasetRow
from .lyapunov import spectrum

COLUMNS = ("condition", "model", "parabolic", "genus", "dim_P", "dim_U",
           "spectrum", "relative_euler", "positive_spectrum", "arithmetic")


@dataclass(frozen=True)
class CellDiff:
    row: int
    column: str
    expected: object
    computed: object

    def __str__(self):
        return f"row {self.row}, column {self.column}: expected {_fmt(self.expected)}, computed {_fmt(self.computed)}"


def _fmt(v):
    if isinstance(v, tuple):
        return "{" + ", ".join(_fmt(x) for x in v) + "}"
    return str(v)


def compute_row(row: DatasetRow) -> dict:
    ct = row.ct
    report = check_sigma_int(ct.mu)
    spec = spectrum(ct)
    dim_p, dim_u = primitive_dimensions(ct)
    return {
        "condition": report.condition,
        "model": model_label(report),
        "parabolic": tuple(report.parabolic_pairs),
        "genus": genus(ct),
        "dim_P": dim_p,
        "dim_U": dim_u,
        "spectrum": spec.distinct_nonnegative,
        "relative_euler": spec.relative_euler,
        "positive_spectrum": tuple(spec.multiplicities) if row.positive_spectrum is not None else None,
        "arithmetic": is_arithmetic(ct),
    }


def expected_row(row: DatasetRow) -> dict:
    return {
        "condition": row.condition,
        "model": row.model,
        "parabolic": row.parabolic,
        "genus": row.genus,
        "dim_P": row.dim_P,
        "dim_U": row.dim_U,
        "spectrum": row.spectrum,
        "relative_euler": row.relative_euler,
        "positive_spectrum": row.positive_spectrum,
        "arithmetic": False,  # every row is a non-arithmetic lattice
    }


def diff_row(row: DatasetRow) -> list[CellDiff]:
    got, want = compute_row(row), expected_row(row)
    return [CellDiff(row.index, c, want[c], got[c]) for c in COLUMNS if got[c] != want[c]]


def diff_table(rows) -> dict[int, list[CellDiff]]:
    return {r.index: diff_row(r) for r in rows}
