"""Top Lyapunov exponents of the Galois conjugates of the uniformizing summand.

For a conjugate ``k`` with ``sigma(k) = 2`` the period map of the k-th summand
degenerates along the elliptic boundary divisors; its vanishing orders give a
divisor ``D_k`` and

    lambda_1 = 1 - D_k . (K^orb)^(n-1) / (K^orb)^n.

Surfaces are evaluated on ``B10`` (any blow-down is pulled back, which keeps
all intersection numbers), threefolds on the ``B14`` model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .chow import (
    B10,
    DivisorClass,
    ModelId,
    boundary_pullback,
    build_model,
    canonical_pullback,
    intersect,
)
from .conditions import (
    CONTRACTED,
    ELLIPTIC,
    PARABOLIC,
    SIGMA_INT,
    ConditionReport,
    Pair,
    check_sigma_int,
)
from .covering import (
    UNIFORMIZING,
    UNITARY,
    CoveringType,
    conjugate_classes,
    weight_vector,
)
from .errors import (
    LatticeConditionFailed,
    ModelMismatch,
    NotUniformizingSignature,
    UnsupportedDimension,
    UnsupportedProfile,
)

BELOW = "below-1"
ABOVE = "above-1"


@dataclass(frozen=True)
class VanishingOrder:
    ell: Fraction   # kappa * |1 - mu_i(k) - mu_j(k)|, an integer under the lattice conditions
    n: Fraction
    regime: str


@dataclass(frozen=True)
class VanishingOrders:
    k: int
    entries: tuple[tuple[Pair, VanishingOrder], ...]

    def __getitem__(self, pair: Pair) -> VanishingOrder:
        return dict(self.entries)[pair]

    def __iter__(self) -> Iterator[Pair]:
        return (p for p, _ in self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return iter(self.entries)


def _report(ct: CoveringType) -> ConditionReport:
    return check_sigma_int(ct.mu)


def _uniformizing_weights(ct: CoveringType, k: int):
    w = weight_vector(ct, k)
    if w.sigma != 2:
        raise NotUniformizingSignature(f"sigma({k}) = {w.sigma} for {ct}; need 2")
    return w


def vanishing_orders(ct: CoveringType, k: int) -> VanishingOrders:
    """Orders of vanishing of the k-th period map along elliptic divisors."""
    muk = _uniformizing_weights(ct, k).mu
    report = _report(ct)
    out = []
    for p in report.pairs:
        if p.kind != ELLIPTIC:
            continue
        i, j = p.pair
        sk = muk[i - 1] + muk[j - 1]
        ell = p.kappa * abs(1 - sk)
        if sk < 1:
            out.append((p.pair, VanishingOrder(ell, ell - 1, BELOW)))
        else:
            out.append((p.pair, VanishingOrder(ell, ct.n * ell - 1, ABOVE)))
    return VanishingOrders(k, tuple(out))


# -- where the classes live ---------------------------------------------------

def _default_model(ct: CoveringType, report: ConditionReport) -> ModelId:
    if ct.N == 5:
        return B10
    if ct.N == 6:
        if report.model is None:
            raise UnsupportedProfile(f"no catalogued threefold model for {ct}")
        return report.model
    raise UnsupportedDimension(f"no model for N={ct.N}")


def _boundary(ct: CoveringType, report: ConditionReport, mid: ModelId) -> dict[Pair, DivisorClass]:
    """Boundary divisors present on ``mid`` for the weights of ``report``."""
    contracted = report.contracted_pairs
    if mid.tag == "B10" and contracted:
        # blow-down of B10, pulled back
        return {p.pair: boundary_pullback(contracted, p.pair)
                for p in report.pairs if p.kind != CONTRACTED}
    if mid.N != ct.N:
        raise ModelMismatch(f"{mid.tag} is a model for N={mid.N}, not {ct.N}")
    if mid.is_surface and sorted(mid.contracted) != sorted(contracted):
        raise ModelMismatch(f"{mid.tag} contracts {list(mid.contracted)}, weights contract {contracted}")
    return build_model(mid).boundary


def _canonical(report: ConditionReport, mid: ModelId) -> DivisorClass:
    if mid.tag == "B10":
        return canonical_pullback(report.contracted_pairs)
    return build_model(mid).canonical


def _assemble(mid: ModelId, boundary, coeffs: dict[Pair, Fraction]) -> DivisorClass:
    out = build_model(mid).zero()
    for pair, c in coeffs.items():
        if c and pair in boundary:
            out = out + boundary[pair] * c
    return out


def _Dk_coeffs(ct, k) -> dict[Pair, Fraction]:
    report = _report(ct)
    orders = vanishing_orders(ct, k)
    return {pair: o.n / report.profile(pair).kappa for pair, o in orders.items()}


def _Korb_coeffs(report: ConditionReport) -> dict[Pair, Fraction]:
    # 1/kappa = 0 on parabolic pairs
    return {p.pair: 1 - p.inverse_kappa for p in report.pairs if p.kind in (ELLIPTIC, PARABOLIC)}


def divisor_Dk(ct: CoveringType, k: int, model: ModelId | None = None) -> DivisorClass:
    """``D_k = sum n_ij / kappa_ij [L_ij]`` on ``model`` (default: B10 or B14)."""
    report = _report(ct)
    mid = model or _default_model(ct, report)
    return _assemble(mid, _boundary(ct, report, mid), _Dk_coeffs(ct, k))


def orbifold_canonical(ct: CoveringType, model: ModelId | None = None) -> DivisorClass:
    """``K^orb = K + sum (1 - 1/kappa_ij) [L_ij]`` with coefficient 1 on cusps."""
    report = _report(ct)
    mid = model or _default_model(ct, report)
    K = _canonical(report, mid)
    return K + _assemble(mid, _boundary(ct, report, mid), _Korb_coeffs(report))


def _require_lattice(ct: CoveringType) -> ConditionReport:
    report = _report(ct)
    if not report.is_lattice:
        raise LatticeConditionFailed(f"{ct} satisfies neither INT nor Sigma-INT")
    return report


def _top(mid: ModelId, *classes: DivisorClass) -> Fraction:
    return intersect(mid, list(classes))


def lambda1(ct: CoveringType, k: int, model: ModelId | None = None) -> Fraction:
    _uniformizing_weights(ct, k)
    _require_lattice(ct)
    D = divisor_Dk(ct, k, model)
    K = orbifold_canonical(ct, model)
    mid = K.model
    n = ct.n
    return 1 - _top(mid, D, *[K] * (n - 1)) / _top(mid, *[K] * n)


def pair_lambda1(ct: CoveringType, k: int) -> Fraction:
    """``lambda_1`` of the conjugate pair containing ``k``, evaluated on its sigma = 2 member."""
    for cp in conjugate_classes(ct):
        if k in cp.reps:
            if cp.uniformizing_rep is None:
                raise NotUniformizingSignature(f"pair {cp.reps} of {ct} has no member with sigma = 2")
            return lambda1(ct, cp.uniformizing_rep)
    raise NotUniformizingSignature(f"k={k} is not a unit mod {ct.d}")


def cab_invariants(ct: CoveringType, k: int, model: ModelId | None = None) -> dict[tuple[int, int], Fraction]:
    """``E^a . (K^orb)^b / (K^orb)^n`` for ``a + b = n``, with ``E = (K^orb - D_k)/(n+1)``."""
    _uniformizing_weights(ct, k)
    _require_lattice(ct)
    D = divisor_Dk(ct, k, model)
    K = orbifold_canonical(ct, model)
    mid, n = K.model, ct.n
    E = (K - D) / (n + 1)
    top = _top(mid, *[K] * n)
    return {(a, n - a): _top(mid, *[E] * a, *[K] * (n - a)) / top for a in range(n + 1)}


# -- quotient cross-check -------------------------------------------------------

def lambda1_quotient(ct: CoveringType, k: int) -> Fraction:
    """``lambda_1`` computed on ``B9/S3`` or ``B7/S3`` with the printed pairings.

    Only defined for Sigma-INT weights with a three-element symmetry set that is
    the catalogue's {1, 2, 3}.  Used as an independent check of the upstairs value.
    """
    from .chow import QUOTIENT_GENERATORS, quotient_intersect

    _uniformizing_weights(ct, k)
    report = _require_lattice(ct)
    mid = report.model
    if report.condition != SIGMA_INT or report.S is None or len(report.S) != 3 \
            or mid is None or mid.tag not in ("B9", "B7"):
        raise UnsupportedProfile(f"{ct} has no B9/S3 or B7/S3 quotient model")
    if sorted(mid.catalogue_index(s) for s in report.S) != [1, 2, 3]:
        raise UnsupportedProfile(f"symmetry set {report.S} is not the catalogue's {{1,2,3}}")
    qid = ModelId(mid.tag + "/S3", mid.relabel)
    q = build_model(qid)
    orders = vanishing_orders(ct, k)
    D, K = q.zero(), q.canonical
    for gen in QUOTIENT_GENERATORS[qid.tag]:
        pair = qid.from_catalogue(gen)
        prof = report.profile(pair)
        scale = 2 if prof.in_S else 1
        L = q.boundary[pair]
        if prof.kind == PARABOLIC:
            K = K + L
        elif prof.kind == ELLIPTIC:
            K = K + L * (1 - 1 / (scale * prof.kappa))
            D = D + L * (orders[pair].n / (scale * prof.kappa))
    return 1 - quotient_intersect(qid.tag, D, K) / quotient_intersect(qid.tag, K, K)


# -- full primitive spectrum --------------------------------------------------

@dataclass(frozen=True)
class PairExponent:
    reps: tuple[int, int]
    kind: str
    k: int | None                 # the member with sigma = 2, if any
    signature: tuple[int, int]    # of ``k`` (or of the smaller rep)
    rank: int
    lam: Fraction | None          # None means not computed

    @property
    def nonnegative(self) -> list[Fraction] | None:
        """Non-negative half of the exponents of this real summand."""
        if self.kind == UNITARY:
            return [Fraction(0)] * self.rank
        if self.lam is None:
            return None
        return [self.lam, self.lam] + [Fraction(0)] * (self.rank - 2)


@dataclass(frozen=True)
class SpectrumReport:
    ct: CoveringType
    condition: ConditionReport
    pairs: tuple[PairExponent, ...]
    distinct_nonnegative: tuple[Fraction, ...]
    cab: dict
    relative_euler: tuple[Fraction, ...] | None

    @property
    def maximally_degenerate(self) -> bool:
        return self.distinct_nonnegative == (Fraction(1), Fraction(0))

    @property
    def multiplicities(self) -> list[Fraction]:
        out = []
        for p in self.pairs:
            out.extend(p.nonnegative or [])
        return sorted(out, reverse=True)

    @property
    def uncomputed(self) -> list[tuple[int, int]]:
        return [p.reps for p in self.pairs if p.kind not in (UNITARY,) and p.lam is None]


def spectrum(ct: CoveringType) -> SpectrumReport:
    if weight_vector(ct, 1).sigma != 2:
        raise NotUniformizingSignature(f"sigma(1) != 2 for {ct}")
    report = _require_lattice(ct)
    pairs, cab = [], {}
    values = {Fraction(0)}
    for cp in conjugate_classes(ct):
        if cp.kind == UNIFORMIZING:
            k = cp.uniformizing_rep
            lam = lambda1(ct, k)
            cab[k] = cab_invariants(ct, k)
            values.add(lam)
        elif cp.kind == UNITARY:
            k, lam = None, Fraction(0)
        else:
            k, lam = None, None
        member = k or cp.reps[0]
        w = weight_vector(ct, member)
        pairs.append(PairExponent(cp.reps, cp.kind, k, w.signature, w.rank, lam))
    rel = None
    if ct.n == 2:
        rel = tuple(sorted({9 * c[(2, 0)] for c in cab.values()}, reverse=True))
    return SpectrumReport(ct, report, tuple(pairs), tuple(sorted(values, reverse=True)), cab, rel)
