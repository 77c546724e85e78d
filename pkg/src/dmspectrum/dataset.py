"""The bundled table of non-arithmetic examples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

import yaml

from .covering import CoveringType, parse_type

DATA_FILE = "nonarithmetic_table.yaml"


@dataclass(frozen=True)
class DatasetRow:
    index: int
    ct: CoveringType
    condition: str
    model: str
    parabolic: tuple[tuple[int, int], ...]
    genus: int
    dim_P: int
    dim_U: int
    spectrum: tuple[Fraction, ...]
    relative_euler: tuple[Fraction, ...] | None
    comm_to: int | None
    positive_spectrum: tuple[Fraction, ...] | None = None


def _rationals(values):
    if values is None:
        return None
    return tuple(Fraction(str(v)) for v in values)


def _row(raw: dict) -> DatasetRow:
    return DatasetRow(
        index=int(raw["index"]),
        ct=parse_type(raw["type"]),
        condition=raw["condition"],
        model=raw["model"],
        parabolic=tuple(tuple(sorted(p)) for p in raw.get("parabolic") or []),
        genus=int(raw["genus"]),
        dim_P=int(raw["dim_P"]),
        dim_U=int(raw["dim_U"]),
        spectrum=_rationals(raw["spectrum"]),
        relative_euler=_rationals(raw.get("relative_euler")),
        comm_to=raw.get("comm_to"),
        positive_spectrum=_rationals(raw.get("positive_spectrum")),
    )


def load_rows(path: str | Path | None = None) -> list[DatasetRow]:
    if path is None:
        text = resources.files(__package__).joinpath("data").joinpath(DATA_FILE).read_text()
    else:
        text = Path(path).read_text()
    return [_row(r) for r in yaml.safe_load(text)["rows"]]


def surface_rows(path=None) -> list[DatasetRow]:
    return [r for r in load_rows(path) if r.ct.N == 5]


def known_edges(rows) -> list[tuple[int, int]]:
    """Commensurable pairs (by position in ``rows``) from the ``comm_to`` column."""
    pos = {r.index: i for i, r in enumerate(rows, 1)}
    edges = set()
    for r in rows:
        if r.comm_to is not None and r.comm_to in pos:
            edges.add(tuple(sorted((pos[r.index], pos[r.comm_to]))))
    return sorted(edges)
