"""Commensurability invariants and the grouping of lattices by them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .conditions import PARABOLIC
from .covering import CoveringType
from .errors import InconsistentKnownEdges
from .lyapunov import spectrum


@dataclass(frozen=True)
class TraceField:
    """The real cyclotomic field Q(cos 2 pi / d), identified by a canonical index."""

    canonical_d: int
    degree: int

    def __str__(self):
        return f"Q(cos 2pi/{self.canonical_d})"


def _phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def trace_field(d) -> TraceField:
    """Q(zeta_m)^+ = Q(zeta_2m)^+ for odd m; otherwise distinct indices give distinct fields."""
    d = getattr(d, "d", d)
    m = 2 * d if d % 2 else d
    degree = 1 if m <= 2 else _phi(m) // 2
    return TraceField(m, degree)


@dataclass(frozen=True)
class CommensurabilityInvariant:
    dimension: int
    trace_field: TraceField
    spectrum: tuple[Fraction, ...]
    relative_euler: tuple[Fraction, ...] | None
    cocompact: bool

    def key(self, with_cocompactness: bool = True):
        base = (self.dimension, self.trace_field, self.spectrum, self.relative_euler)
        return base + (self.cocompact,) if with_cocompactness else base


def invariants(ct: CoveringType) -> CommensurabilityInvariant:
    rep = spectrum(ct)
    cocompact = not any(p.kind == PARABOLIC for p in rep.condition.pairs)
    return CommensurabilityInvariant(ct.n, trace_field(ct.d), rep.distinct_nonnegative,
                                     rep.relative_euler, cocompact)


def partition(cts: Sequence[CoveringType],
              known_edges: Iterable[tuple[int, int]] = (),
              with_cocompactness: bool = True) -> list[list[int]]:
    """Group 1-based input indices by equal invariants.

    ``known_edges`` lists index pairs known to be commensurable; each must land
    in one class, otherwise :class:`InconsistentKnownEdges` is raised.  Classes
    are sorted by their smallest member, so the output does not depend on input
    order beyond the indices themselves.
    """
    groups: dict = {}
    keys = []
    for i, ct in enumerate(cts, 1):
        key = invariants(ct).key(with_cocompactness)
        keys.append(key)
        groups.setdefault(key, []).append(i)
    for a, b in known_edges:
        if keys[a - 1] != keys[b - 1]:
            raise InconsistentKnownEdges(f"rows {a} and {b} are commensurable but have different invariants")
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
