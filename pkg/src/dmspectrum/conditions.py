"""Lattice conditions (INT) / (Sigma INT), boundary pair profiles, model selection
and the finite sweep over covering types."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import gcd
from typing import Iterator, Sequence

from .covering import CoveringType, is_arithmetic
from .errors import BadWeightSum, UnsupportedDimension, UnsupportedProfile

ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
CONTRACTED = "contracted"

INT = "INT"
SIGMA_INT = "SigmaINT"
NEITHER = "neither"

Pair = tuple[int, int]  # 1-based, i < j


@dataclass(frozen=True)
class PairProfile:
    pair: Pair
    sum: Fraction
    kind: str
    kappa: Fraction | None  # None for parabolic (kappa = infinity) and contracted
    in_S: bool = False

    @property
    def inverse_kappa(self) -> Fraction:
        """``1/kappa`` with the convention 1/kappa = 0 on parabolic pairs."""
        if self.kind == ELLIPTIC:
            return 1 - self.sum
        if self.kind == PARABOLIC:
            return Fraction(0)
        raise ValueError(f"pair {self.pair} is contracted; no kappa")


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    S: tuple[int, ...] | None
    pairs: tuple[PairProfile, ...]
    mu: tuple[Fraction, ...] = ()
    model: object = None  # chow.ModelId, or None when no catalogued model fits
    all_S: tuple[tuple[int, ...], ...] = ()

    @property
    def parabolic_pairs(self) -> list[Pair]:
        return [p.pair for p in self.pairs if p.kind == PARABOLIC]

    @property
    def contracted_pairs(self) -> list[Pair]:
        return [p.pair for p in self.pairs if p.kind == CONTRACTED]

    @property
    def is_lattice(self) -> bool:
        return self.condition in (INT, SIGMA_INT)

    def profile(self, pair: Pair) -> PairProfile:
        for p in self.pairs:
            if p.pair == pair:
                return p
        raise KeyError(pair)


def _weights(mu) -> tuple[Fraction, ...]:
    mu = tuple(getattr(mu, "mu", mu))
    if sum(mu) != 2:
        raise BadWeightSum(f"weights sum to {sum(mu)}, not 2")
    return mu


def pair_profiles(mu, S: Sequence[int] = ()) -> list[PairProfile]:
    """Classify every pair ``{i, j}`` as elliptic / parabolic / contracted."""
    mu = _weights(mu)
    S = set(S)
    out = []
    for i, j in combinations(range(1, len(mu) + 1), 2):
        s = mu[i - 1] + mu[j - 1]
        if s < 1:
            kind, kappa = ELLIPTIC, 1 / (1 - s)
        elif s == 1:
            kind, kappa = PARABOLIC, None
        else:
            kind, kappa = CONTRACTED, None
        out.append(PairProfile((i, j), s, kind, kappa, i in S and j in S))
    return out


def check_int(mu) -> bool:
    return all(p.kappa.denominator == 1 for p in pair_profiles(mu) if p.kind == ELLIPTIC)


def _sigma_int_holds(profiles: list[PairProfile]) -> bool:
    for p in profiles:
        if p.kind != ELLIPTIC:
            continue
        scale = 2 if p.in_S else 1
        if (scale * p.kappa).denominator != 1:
            return False
    return True


def _candidate_sets(mu: tuple[Fraction, ...]) -> list[tuple[int, ...]]:
    # maximal equal-weight classes first, then their subsets by decreasing size
    classes = {}
    for i, m in enumerate(mu, 1):
        classes.setdefault(m, []).append(i)
    groups = [tuple(v) for v in classes.values() if len(v) >= 2]
    out = []
    for size in range(max((len(g) for g in groups), default=0), 1, -1):
        for g in sorted(groups):
            if len(g) >= size:
                out.extend(combinations(g, size))
    return out


def check_sigma_int(mu) -> ConditionReport:
    """Decide which lattice condition the weights satisfy.

    (INT) is reported whenever it holds. Otherwise candidate symmetry sets S are
    tried in order and the first one satisfying (Sigma INT) is reported; every
    satisfying S is kept in ``all_S``.
    """
    mu = _weights(mu)
    if check_int(mu):
        report = ConditionReport(INT, None, tuple(pair_profiles(mu)), mu)
    else:
        found = [S for S in _candidate_sets(mu) if _sigma_int_holds(pair_profiles(mu, S))]
        if found:
            report = ConditionReport(SIGMA_INT, found[0], tuple(pair_profiles(mu, found[0])), mu,
                                     all_S=tuple(found))
        else:
            report = ConditionReport(NEITHER, None, tuple(pair_profiles(mu)), mu)
    try:
        model = select_model(report, len(mu))
    except (UnsupportedDimension, UnsupportedProfile):
        model = None
    return replace(report, model=model)


# -- model selection ----------------------------------------------------------

# Hassett-chamber signature of the threefold example (7/12, 5/12, 1/4, 1/4, 1/4, 1/4):
# the sign of (sum over I of mu) - 1 for every subset I with 2 <= |I| <= 3.
_B14_REFERENCE = (Fraction(7, 12), Fraction(5, 12)) + (Fraction(1, 4),) * 4


def _chamber(mu: Sequence[Fraction]):
    N = len(mu)
    sig = []
    for r in (2, 3):
        for I in combinations(range(N), r):
            t = sum(mu[i] for i in I) - 1
            sig.append((t > 0) - (t < 0))
    return tuple(sig)


def _b14_relabel(mu: Sequence[Fraction]) -> tuple[int, ...] | None:
    """Permutation p with p[i] = catalogue index of branch point i+1, if ``mu`` lies
    in the chamber of the catalogued threefold model."""
    target = _chamber(mu)
    if len(mu) != 6 or sorted(target) != sorted(_chamber(_B14_REFERENCE)):
        return None
    for perm in permutations(range(6)):
        # perm[c] = original position playing the role of catalogue point c+1
        ref = [None] * 6
        for c, orig in enumerate(perm):
            ref[orig] = _B14_REFERENCE[c]
        if _chamber(ref) == target:
            relabel = [0] * 6
            for c, orig in enumerate(perm):
                relabel[orig] = c + 1
            return tuple(relabel)
    return None


def select_model(report: ConditionReport, N: int):
    """Pick the catalogued compactification matching the contracted-pair profile.

    Surfaces: B10 (nothing contracted), B9 (one pair), B7 (three pairs through a
    common branch point).  Threefolds: B14 for the chamber of the known example.
    """
    from .chow import ModelId  # chow imports this module's types

    if N == 5:
        contracted = report.contracted_pairs
        if not contracted:
            return ModelId("B10", (1, 2, 3, 4, 5))
        if len(contracted) == 1:
            a, b = contracted[0]
            rest = [i for i in range(1, 6) if i not in (a, b)]
            relabel = [0] * 5
            for c, orig in enumerate(rest + [a, b], 1):
                relabel[orig - 1] = c
            return ModelId("B9", tuple(relabel))
        if len(contracted) == 3:
            common = reduce(set.intersection, (set(p) for p in contracted))
            if len(common) == 1:
                (hub,) = common
                others = sorted(i for p in contracted for i in p if i != hub)
                last = [i for i in range(1, 6) if i != hub and i not in others]
                relabel = [0] * 5
                for c, orig in enumerate(others + last + [hub], 1):
                    relabel[orig - 1] = c
                return ModelId("B7", tuple(relabel))
        raise UnsupportedProfile(f"no catalogued surface with contracted pairs {contracted}")
    if N == 6:
        relabel = _b14_relabel(report.mu)
        if relabel is None:
            raise UnsupportedProfile("six-point weights outside the catalogued threefold chamber")
        return ModelId("B14", relabel)
    raise UnsupportedDimension(f"no catalogued model for N={N} branch points")


# -- enumeration --------------------------------------------------------------

FILTERS = ("int", "sigmaint", "nonarithmetic", "all")


def _partitions(total: int, parts: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of ``parts`` integers in [lo, hi] summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(lo, hi + 1):
        rest = total - x
        if rest < x * (parts - 1) or rest > hi * (parts - 1):
            continue
        for tail in _partitions(rest, parts - 1, x, hi):
            yield (x,) + tail


def enumerate_types(max_d: int, N: int, filter: str = "sigmaint", min_d: int = 2) -> list[CoveringType]:
    """All canonical (non-decreasing) types with ``sigma(1) = 2`` passing ``filter``,
    in lexicographic order of ``(d, a)``."""
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")
    out = []
    for d in range(max(min_d, 2), max_d + 1):
        for a in _partitions(2 * d, N, 1, d - 1):
            if reduce(gcd, a, d) != 1:
                continue
            ct = CoveringType(d, a)
            if _passes(ct, filter):
                out.append(ct)
    return out


def _may_be_lattice(ct: CoveringType) -> bool:
    # exact integer necessary condition: kappa or 2*kappa integral on every elliptic pair
    d = ct.d
    return all((2 * d) % (d - x - y) == 0 for x, y in combinations(ct.a, 2) if x + y < d)


def _passes(ct: CoveringType, filter: str) -> bool:
    if filter == "all":
        return True
    if not _may_be_lattice(ct):
        return False
    if filter == "int":
        return check_int(ct.mu)
    if not lattice_condition(ct).is_lattice:
        return False
    if filter == "nonarithmetic":
        return not is_arithmetic(ct)
    return True


def lattice_condition(ct: CoveringType) -> ConditionReport:
    """Condition report of the base weights ``mu(1)``."""
    return check_sigma_int(ct.mu)


def model_label(report: ConditionReport) -> str | None:
    """Model tag as printed in tables, e.g. ``B9`` or ``B10/S4`` (quotient by Sym(S))."""
    if report.model is None:
        return None
    if report.condition == SIGMA_INT and report.S:
        return f"{report.model.tag}/S{len(report.S)}"
    return report.model.tag
