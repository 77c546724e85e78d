"""Orbifold Euler numbers of the pairs ``(B^mu, R^mu)`` on surfaces.

``orb_euler`` evaluates the closed formula (strata of the boundary arrangement
with their local orbifold weights); ``bmy_check`` compares three times that
value with ``(K + R)^2`` computed in the Chow ring.  The two sides are derived
independently, so their agreement is a genuine check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chow import B10, DivisorClass, ModelId, boundary_pullback, build_model, canonical_pullback, intersect
from .conditions import CONTRACTED, ConditionReport, NEITHER, pair_profiles, select_model
from .covering import CoveringType, weight_vector
from .errors import BadWeightSum, NotASurface
from .lyapunov import divisor_Dk, orbifold_canonical, _require_lattice, _uniformizing_weights


@dataclass(frozen=True)
class EulerReport:
    mu: tuple[Fraction, ...]
    e_orb: Fraction
    c1_sq: Fraction
    relative: Fraction | None = None

    @property
    def bmy_holds(self) -> bool:
        return 3 * self.e_orb == self.c1_sq


def _surface_weights(mu) -> tuple[Fraction, ...]:
    mu = tuple(Fraction(x) for x in getattr(mu, "mu", mu))
    if len(mu) != 5:
        raise NotASurface(f"{len(mu)} weights; the Euler formula is for five points")
    if sum(mu) != 2:
        raise BadWeightSum(f"weights sum to {sum(mu)}, not 2")
    return mu


def _pairs():
    return list(combinations(range(1, 6), 2))


def boundary_R(mu, model: ModelId | None = None) -> DivisorClass:
    """``R = sum (mu_i + mu_j) [L_ij]`` over the boundary divisors that survive.

    With ``model=None`` the catalogued surface matching the contraction profile
    is used.
    """
    mu = _surface_weights(mu)
    profiles = pair_profiles(mu)
    if model is None:
        model = select_model(ConditionReport(NEITHER, None, tuple(profiles), mu), 5)
    if not model.is_surface:
        raise NotASurface(f"{model.tag} is not a surface model")
    m = build_model(model)
    out = m.zero()
    for p in profiles:
        if p.kind != CONTRACTED:
            out = out + m.boundary[p.pair] * p.sum
    return out


def orb_euler(mu) -> Fraction:
    """Orbifold Euler number of ``(B^mu, R^mu)`` from the stratification.

    Open part contributes 7; each surviving boundary curve with weight ``a``
    (coefficient in R) adds ``a``; a contracted pair leaves an ordinary triple
    point of weight ``(a - 1)^2 - 2``; two surviving curves with disjoint index
    sets meet transversally once and add ``(1 - a)(1 - a') - 1``.
    """
    mu = _surface_weights(mu)
    coeff = {p: mu[p[0] - 1] + mu[p[1] - 1] for p in _pairs()}
    alive = [p for p in _pairs() if coeff[p] <= 1]
    total = Fraction(7)
    for p in _pairs():
        a = coeff[p]
        total += a if a <= 1 else (a - 1) ** 2 - 2
    for p, q in combinations(alive, 2):
        if not set(p) & set(q):
            total += (1 - coeff[p]) * (1 - coeff[q]) - 1
    return total


def log_canonical_square(mu) -> Fraction:
    """``(K + R)^2`` on the blow-down of ``B10``, computed on ``B10``."""
    mu = _surface_weights(mu)
    contracted = [p.pair for p in pair_profiles(mu) if p.kind == CONTRACTED]
    c = canonical_pullback(contracted)
    for p in pair_profiles(mu):
        if p.kind != CONTRACTED:
            c = c + boundary_pullback(contracted, p.pair) * p.sum
    return intersect(B10, [c, c])


def bmy_check(mu) -> EulerReport:
    mu = _surface_weights(mu)
    if not all(0 < x < 1 for x in mu):
        raise ValueError("weights must lie strictly between 0 and 1")
    return EulerReport(mu, orb_euler(mu), log_canonical_square(mu))


def relative_euler(ct: CoveringType, k: int) -> Fraction:
    """``(K^orb - D_k)^2 / (K^orb)^2``: ratio of the Euler numbers of the k-th
    cone structure and of the uniformizing one."""
    if ct.N != 5:
        raise NotASurface("relative Euler numbers are only defined for surfaces")
    muk = _uniformizing_weights(ct, k).mu
    report = _require_lattice(ct)
    # every pair contracted for mu(1) stays contracted for mu(k)
    for pair in report.contracted_pairs:
        i, j = pair
        assert muk[i - 1] + muk[j - 1] > 1, (ct, k, pair)
    D = divisor_Dk(ct, k)
    K = orbifold_canonical(ct)
    E = K - D
    return intersect(K.model, [E, E]) / intersect(K.model, [K, K])


def orbifold_euler_ratio(ct: CoveringType, k: int) -> Fraction:
    """The same ratio read off the closed Euler formula for ``mu(k)`` and ``mu(1)``."""
    return orb_euler(weight_vector(ct, k).mu) / orb_euler(ct.mu)


# -- pseudo-random weights ----------------------------------------------------

@dataclass(frozen=True)
class WeightSampler:
    """Seeded generator of rational quintuples with sum 2 in (0, 1)^5.

    Denominators are at most ``max_den``.  Every ``parabolic_every``-th sample is
    forced to contain a pair summing to exactly 1; the others avoid such pairs.
    """

    seed: int = 1
    max_den: int = 30
    parabolic_every: int = 10

    def samples(self, count: int):
        rng = random.Random(self.seed)
        for t in range(count):
            yield self._one(rng, parabolic=self.parabolic_every > 0 and t % self.parabolic_every == 0)

    def _one(self, rng: random.Random, parabolic: bool) -> tuple[Fraction, ...]:
        while True:
            q = rng.randint(3, self.max_den)
            if parabolic:
                x = rng.randint(1, q - 1)
                rest = _split(rng, q, q, 3)
                if rest is None:
                    continue
                mu = [Fraction(x, q), Fraction(q - x, q)] + rest
                rng.shuffle(mu)
            else:
                mu = _split(rng, q, 2 * q, 5)
                if mu is None:
                    continue
                if any(a + b == 1 for a, b in combinations(mu, 2)):
                    continue
            return tuple(mu)


def _split(rng: random.Random, q: int, total: int, parts: int):
    """``parts`` numerators in [1, q-1] summing to ``total``, over ``q``; or None."""
    nums = [rng.randint(1, q - 1) for _ in range(parts - 1)]
    last = total - sum(nums)
    if not 0 < last < q:
        return None
    return [Fraction(x, q) for x in nums + [last]]


def random_weights(count: int, seed: int = 1) -> list[tuple[Fraction, ...]]:
    return list(WeightSampler(seed).samples(count))
