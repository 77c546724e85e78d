"""Intersection rings of the compactified moduli spaces.

Surfaces (five branch points) are realised as the projective plane blown up at
four points (``B10``), three points (``B9``) or one point (``B7``); the threefold
example lives on P^3 blown up at four points (``B14``).  Two symmetric quotients
``B9/S3`` and ``B7/S3`` are kept with their printed intersection matrices and are
only used to cross-check computations done upstairs.

Catalogue labels vs. input labels: each catalogue fixes which branch points are
contracted (e.g. ``B9`` contracts the pair {4, 5}).  A :class:`ModelId` carries
a relabelling that maps branch point ``i`` of the input to its catalogue index,
so boundary divisors are always looked up with the caller's own labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    ModelMismatch,
    NotASurface,
    UnknownModel,
)

Pair = tuple[int, int]

# Self-intersection e^3 of an exceptional divisor over a point blown up in P^3.
# The standard value +1 is the one that reproduces the published threefold
# exponent 25/93; the opposite sign gives 25/157.
E_CUBE = 1

SURFACE_TAGS = ("B10", "B9", "B7")
QUOTIENT_TAGS = ("B9/S3", "B7/S3")
TAGS = SURFACE_TAGS + ("B14",) + QUOTIENT_TAGS


@dataclass(frozen=True)
class ModelId:
    tag: str
    relabel: tuple[int, ...] | None = None  # relabel[i-1] = catalogue index of point i
    cusp_blowup: bool = False               # B14 only: blow up the semi-stable point
    e_cube: int = E_CUBE                    # B14 only: sign of e_j^3

    def __post_init__(self):
        if self.tag not in TAGS:
            raise UnknownModel(self.tag)
        if self.relabel is not None:
            relabel = tuple(self.relabel)
            if sorted(relabel) != list(range(1, self.N + 1)):
                raise ValueError(f"relabel {relabel} is not a permutation of 1..{self.N}")
            if relabel == tuple(range(1, self.N + 1)):
                relabel = None
            object.__setattr__(self, "relabel", relabel)
        if self.e_cube not in (1, -1):
            raise ValueError("e_cube must be +1 or -1")

    @property
    def dim(self) -> int:
        return 3 if self.tag == "B14" else 2

    @property
    def N(self) -> int:
        return 6 if self.tag == "B14" else 5

    @property
    def is_surface(self) -> bool:
        return self.tag in SURFACE_TAGS

    def catalogue_index(self, i: int) -> int:
        return i if self.relabel is None else self.relabel[i - 1]

    def to_catalogue(self, pair: Pair) -> Pair:
        if self.relabel is None:
            return tuple(sorted(pair))
        i, j = (self.relabel[x - 1] for x in pair)
        return (min(i, j), max(i, j))

    def from_catalogue(self, pair: Pair) -> Pair:
        if self.relabel is None:
            return pair
        inv = {c: i for i, c in enumerate(self.relabel, 1)}
        i, j = inv[pair[0]], inv[pair[1]]
        return (min(i, j), max(i, j))

    @property
    def contracted(self) -> tuple[Pair, ...]:
        """Contracted pairs in input labels."""
        cat = {"B9": [(4, 5)], "B7": [(1, 5), (2, 5), (3, 5)]}.get(self.tag, [])
        return tuple(sorted(self.from_catalogue(p) for p in cat))

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class DivisorClass:
    model: ModelId
    coeffs: tuple[Fraction, ...]

    def _check(self, other: "DivisorClass"):
        if other.model.tag != self.model.tag or len(other.coeffs) != len(self.coeffs):
            raise ModelMismatch(f"{self.model} vs {other.model}")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(self.model, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(self.model, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(self.model, tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        c = Fraction(c)
        return DivisorClass(self.model, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        names = basis_names(self.model)
        terms = [f"{c}*{n}" for c, n in zip(self.coeffs, names) if c]
        return f"<{self.model.tag}: {' + '.join(terms) or '0'}>"


@dataclass(frozen=True)
class Model:
    id: ModelId
    basis: tuple[str, ...]
    boundary: dict = field(hash=False)   # input-label pair -> DivisorClass
    canonical: DivisorClass = None

    def zero(self) -> DivisorClass:
        return DivisorClass(self.id, (Fraction(0),) * len(self.basis))

    def cls(self, *coeffs) -> DivisorClass:
        if len(coeffs) != len(self.basis):
            raise DimensionMismatch(f"{self.id.tag} has basis {self.basis}")
        return DivisorClass(self.id, tuple(Fraction(c) for c in coeffs))

    def L(self, i: int, j: int) -> DivisorClass:
        return self.boundary[(min(i, j), max(i, j))]


# -- catalogues (in catalogue labels) ---------------------------------------

def basis_names(mid: ModelId) -> tuple[str, ...]:
    return {
        "B10": ("h", "e1", "e2", "e3", "e4"),
        "B9": ("h", "e1", "e2", "e3"),
        "B7": ("h", "e"),
        "B14": ("h", "e3", "e4", "e5", "e6") + (("f",) if mid.cusp_blowup else ()),
        "B9/S3": ("L14", "L15", "L12"),
        "B7/S3": ("L12", "L14", "L45"),
    }[mid.tag]


def _vec(n, **entries):
    v = [Fraction(0)] * n
    for k, c in entries.items():
        v[int(k[1:])] = Fraction(c)
    return v


def _b10_catalogue():
    out = {}
    for i, j in combinations(range(1, 6), 2):
        v = [Fraction(0)] * 5
        if j == 5:
            v[i] = Fraction(1)
        else:
            v[0] = Fraction(1)
            for k in range(1, 5):
                if k not in (i, j):
                    v[k] = Fraction(-1)
        out[(i, j)] = v
    return out, [Fraction(-3)] + [Fraction(1)] * 4


def _b9_catalogue():
    out = {}
    for i, j in combinations(range(1, 4), 2):
        (k,) = {1, 2, 3} - {i, j}
        v = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        v[k] = Fraction(-1)
        out[(i, j)] = v
    for i in range(1, 4):
        v = [Fraction(1)] + [Fraction(-1)] * 3
        v[i] = Fraction(0)
        out[(i, 4)] = v
        w = [Fraction(0)] * 4
        w[i] = Fraction(1)
        out[(i, 5)] = w
    return out, [Fraction(-3)] + [Fraction(1)] * 3


def _b7_catalogue():
    one, zero = Fraction(1), Fraction(0)
    out = {(i, 4): [one, zero] for i in range(1, 4)}
    for p in [(1, 2), (1, 3), (2, 3)]:
        out[p] = [one, -one]
    out[(4, 5)] = [zero, one]
    return out, [Fraction(-3), one]


def _b14_catalogue(cusp: bool):
    n = 6 if cusp else 5
    idx = {3: 1, 4: 2, 5: 3, 6: 4}
    out = {}
    for j in range(3, 7):
        v = [Fraction(0)] * n
        v[idx[j]] = Fraction(1)
        out[(1, j)] = v
        w = [Fraction(1)] + [Fraction(-1)] * 4 + [Fraction(0)] * (n - 5)
        w[idx[j]] += 1
        out[(2, j)] = w
    for j, k in combinations(range(3, 7), 2):
        w = [Fraction(1)] + [Fraction(-1)] * 4 + [Fraction(0)] * (n - 5)
        w[idx[j]] += 1
        w[idx[k]] += 1
        if cusp:
            # the planes z_j = z_k pass through the cusp (1:1:1:1)
            w[5] = Fraction(-1)
        out[(j, k)] = w
    if cusp:
        f = [Fraction(0)] * n
        f[5] = Fraction(1)
        out[(1, 2)] = f
    K = [Fraction(-4)] + [Fraction(2)] * 4 + ([Fraction(2)] if cusp else [])
    return out, K


# Printed intersection matrices of the quotient generators.
QUOTIENT_PAIRINGS = {
    "B9/S3": [[Fraction(-1, 2), 1, 1], [1, Fraction(-1, 2), 1], [1, 1, 4]],
    "B7/S3": [[0, 3, 1], [3, Fraction(3, 2), 0], [1, 0, Fraction(-1, 6)]],
}
_QUOTIENT_K = {
    "B9/S3": [0, 0, -1],
    "B7/S3": [Fraction(-2, 3), Fraction(-2, 3), 0],
}
# generator -> orbit of upstairs boundary divisors, with the stabiliser weight
QUOTIENT_GENERATORS = {
    "B9/S3": {(1, 4): ([(1, 4), (2, 4), (3, 4)], 1),
              (1, 5): ([(1, 5), (2, 5), (3, 5)], 1),
              (1, 2): ([(1, 2), (2, 3), (1, 3)], 2)},
    "B7/S3": {(1, 2): ([(1, 2), (2, 3), (1, 3)], 2),
              (1, 4): ([(1, 4), (2, 4), (3, 4)], 1),
              (4, 5): ([(4, 5)], 1)},
}
QUOTIENT_BASE = {"B9/S3": "B9", "B7/S3": "B7"}


@lru_cache(maxsize=None)
def build_model(mid: ModelId) -> Model:
    """Basis, boundary-divisor catalogue and canonical class of a model."""
    if mid.tag == "B10":
        cat, K = _b10_catalogue()
    elif mid.tag == "B9":
        cat, K = _b9_catalogue()
    elif mid.tag == "B7":
        cat, K = _b7_catalogue()
    elif mid.tag == "B14":
        cat, K = _b14_catalogue(mid.cusp_blowup)
    elif mid.tag in QUOTIENT_TAGS:
        gens = list(QUOTIENT_GENERATORS[mid.tag])
        cat = {}
        for g in gens:
            v = [Fraction(0)] * 3
            v[gens.index(g)] = Fraction(1)
            cat[g] = v
        K = [Fraction(x) for x in _QUOTIENT_K[mid.tag]]
    else:  # pragma: no cover - ModelId already validates the tag
        raise UnknownModel(mid.tag)
    boundary = {mid.from_catalogue(p): DivisorClass(mid, tuple(v)) for p, v in cat.items()}
    return Model(mid, basis_names(mid), boundary, DivisorClass(mid, tuple(K)))


def _surface_form(tag: str):
    if tag in QUOTIENT_TAGS:
        return [[Fraction(x) for x in row] for row in QUOTIENT_PAIRINGS[tag]]
    n = len(basis_names(ModelId(tag)))
    return [[Fraction(0 if r != c else (1 if r == 0 else -1)) for c in range(n)] for r in range(n)]


def _b14_product(x: DivisorClass, y: DivisorClass) -> list[Fraction]:
    """Divisor times divisor in CH^2, basis (l, l_3, ..., l_6[, l_f])."""
    # h.h = l, e_j.e_j = -l_j, every mixed product vanishes
    out = [x.coeffs[0] * y.coeffs[0]]
    out += [-a * b for a, b in zip(x.coeffs[1:], y.coeffs[1:])]
    return out


def _b14_degree(curve: Sequence[Fraction], z: DivisorClass) -> Fraction:
    # h.l = 1, e_j.l_j = -e_cube (so that e_j^3 = e_cube)
    return curve[0] * z.coeffs[0] - z.model.e_cube * sum(
        (a * b for a, b in zip(curve[1:], z.coeffs[1:])), Fraction(0))


def intersect(model, classes: Sequence[DivisorClass]) -> Fraction:
    """Top intersection number of ``dim`` divisor classes."""
    mid = model.id if isinstance(model, Model) else model
    if len(classes) != mid.dim:
        raise DimensionMismatch(f"{mid.tag} needs {mid.dim} classes, got {len(classes)}")
    for c in classes:
        if c.model != mid:
            raise ModelMismatch(f"class on {c.model} used on {mid}")
    if mid.tag == "B14":
        x, y, z = classes
        return _b14_degree(_b14_product(x, y), z)
    form = _surface_form(mid.tag)
    x, y = classes
    return sum((x.coeffs[r] * form[r][c] * y.coeffs[c]
                for r in range(len(form)) for c in range(len(form))), Fraction(0))


def power(mid: ModelId, *classes: DivisorClass) -> Fraction:
    return intersect(mid, list(classes))


def quotient_intersect(tag: str, D1: DivisorClass, D2: DivisorClass) -> Fraction:
    if tag not in QUOTIENT_TAGS:
        raise UnknownModel(tag)
    if D1.model.tag != tag or D2.model.tag != tag:
        raise ModelMismatch(f"classes must live on {tag}")
    return intersect(D1.model, [D1, D2])


def quotient_pullback(mid: ModelId, D: DivisorClass) -> DivisorClass:
    """Pull a quotient class back to the upstairs surface ``B9`` / ``B7``.

    Each generator pulls back to the sum of its orbit, weighted by the order of
    the stabiliser (2 on the diagonals inside the symmetry set).
    """
    base = ModelId(QUOTIENT_BASE[mid.tag], mid.relabel)
    up = build_model(base)
    out = up.zero()
    for coeff, (gen, (orbit, weight)) in zip(D.coeffs, QUOTIENT_GENERATORS[mid.tag].items()):
        for p in orbit:
            out = out + up.boundary[base.from_catalogue(p)] * (coeff * weight)
    return out


# -- blow-downs of B10 --------------------------------------------------------

B10 = ModelId("B10")


def boundary_pullback(contracted: Iterable[Pair], pair: Pair) -> DivisorClass:
    """Total transform on ``B10`` of a boundary divisor of the blown-down surface.

    A contracted curve ``L_ab`` is the point where the three divisors indexed by
    the complement of {a, b} meet, so each of those picks up ``L_ab``.
    """
    m = build_model(B10)
    pair = (min(pair), max(pair))
    out = m.boundary[pair]
    for ab in contracted:
        if pair == tuple(ab):
            raise ValueError(f"L{pair} is contracted; it has no image divisor")
        if not set(pair) & set(ab):
            out = out + m.boundary[tuple(ab)]
    return out


def canonical_pullback(contracted: Iterable[Pair]) -> DivisorClass:
    """``b^* K`` for the blow-down ``b`` of the given (-1)-curves of ``B10``."""
    m = build_model(B10)
    out = m.canonical
    for ab in contracted:
        out = out - m.boundary[tuple(ab)]
    return out


def _solve(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction]:
    """Exact solution of ``sum x_c * columns[c] = target`` (columns independent)."""
    n, m = len(target), len(columns)
    rows = [[columns[c][r] for c in range(m)] + [target[r]] for r in range(n)]
    piv_cols, r = [], 0
    for c in range(m):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][m] != 0 for i in range(r, n)):
        raise ValueError("target not in the span of the columns")
    x = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][m]
    return x


def boundary_coordinates(model: Model, D: DivisorClass) -> dict[Pair, Fraction]:
    """Write ``D`` as a rational combination of boundary divisors of ``model``."""
    pairs = sorted(model.boundary)
    chosen, cols = [], []
    for p in pairs:
        trial = cols + [list(model.boundary[p].coeffs)]
        if _rank(trial) == len(trial):
            chosen.append(p)
            cols = trial
    x = _solve(cols, list(D.coeffs))
    return {p: c for p, c in zip(chosen, x) if c}


def _rank(vectors: list[list[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def blowdown_pullback(profile, D: DivisorClass) -> DivisorClass:
    """Pull a class on a catalogued surface back to ``B10``.

    ``profile`` is the list of pair profiles of the weights (only the contracted
    pairs matter); they must agree with the model ``D`` lives on.
    """
    mid = D.model
    if not mid.is_surface:
        raise NotASurface(f"{mid.tag} is not a blown-up plane")
    contracted = sorted(p.pair for p in profile if p.kind == "contracted")
    if contracted != sorted(mid.contracted):
        raise ModelMismatch(f"profile contracts {contracted}, model {mid.tag} contracts {list(mid.contracted)}")
    model = build_model(mid)
    out = build_model(B10).zero()
    for pair, c in boundary_coordinates(model, D).items():
        out = out + boundary_pullback(contracted, pair) * c
    return out
