"""Cyclic covering types ``y^d = prod (x - x_i)^{a_i}`` and their eigenspace data.

The Galois group Z/d acts on H^1 of the covering curve; the eigenspace for the
character chi^k has local exponents ``mu_i(k) = frac(k * a_i / d)``.  Everything
here is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd

from .errors import (
    OutOfRange,
    PreconditionFailed,
    RejectDegree,
    RejectGcd,
    RejectLength,
    RejectRange,
    RejectSum,
)

UNIFORMIZING = "uniformizing"
UNITARY = "unitary"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class CoveringType:
    d: int
    a: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        """Complex dimension of the ball, ``N - 3``."""
        return len(self.a) - 3

    @cached_property
    def mu(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.d) for x in self.a)

    def __str__(self):
        return f"{self.d};{','.join(map(str, self.a))}"


@dataclass(frozen=True)
class WeightVector:
    """Eigenspace data for one character index ``k``."""

    k: int
    mu: tuple[Fraction, ...]
    sigma: Fraction
    s: int

    @property
    def signature(self) -> tuple[int, int]:
        # Chevalley-Weil: rank L^{1,0} = sigma - 1, rank L^{0,1} = s - 1 - sigma
        sigma = int(self.sigma)
        return (sigma - 1, self.s - 1 - sigma)

    @property
    def rank(self) -> int:
        return self.s - 2


@dataclass(frozen=True)
class ConjugatePair:
    reps: tuple[int, int]            # (min(k, d-k), max(k, d-k))
    kind: str                        # UNIFORMIZING | UNITARY | UNSUPPORTED
    uniformizing_rep: int | None     # member with sigma == 2, if any
    signatures: tuple[tuple[int, int], tuple[int, int]]

    @property
    def k(self) -> int:
        return self.reps[0]


def validate_type(d: int, a) -> CoveringType:
    """Return a :class:`CoveringType` or raise the matching ``Reject*`` error."""
    a = tuple(int(x) for x in a)
    if d < 2:
        raise RejectDegree(f"degree d={d} must be at least 2", d, a)
    if len(a) < 4:
        raise RejectLength(f"need at least 4 branch points, got {len(a)}", d, a)
    for i, x in enumerate(a, 1):
        if not 0 < x < d:
            raise RejectRange(f"a_{i}={x} is not in the open range (0, {d})", d, a)
    g = reduce(gcd, a, d)
    if g != 1:
        raise RejectGcd(f"gcd(a_1,...,a_N,d) = {g} != 1", d, a)
    if sum(a) % d:
        raise RejectSum(f"sum of a_i = {sum(a)} is not divisible by d={d}", d, a)
    return CoveringType(d, a)


def parse_type(text: str) -> CoveringType:
    """Parse ``"d;a1,a2,...,aN"`` (whitespace allowed) and validate it."""
    if ";" not in text:
        raise ValueError(f"expected 'd;a1,...,aN' but found no ';' in {text!r}")
    head, _, tail = text.partition(";")
    try:
        d = int(head.strip())
    except ValueError:
        raise ValueError(f"bad degree {head.strip()!r} at position 0") from None
    a = []
    pos = len(head) + 1
    for chunk in tail.split(","):
        try:
            a.append(int(chunk.strip()))
        except ValueError:
            raise ValueError(f"bad exponent {chunk.strip()!r} at position {pos}") from None
        pos += len(chunk) + 1
    return validate_type(d, a)


def weight_vector(ct: CoveringType, k: int) -> WeightVector:
    if not 1 <= k <= ct.d - 1:
        raise OutOfRange(f"k={k} outside 1..{ct.d - 1}")
    mu = tuple(Fraction(k * x % ct.d, ct.d) for x in ct.a)
    m = ct.d // gcd(k, ct.d)
    s = sum(1 for x in ct.a if x % m)
    return WeightVector(k=k, mu=mu, sigma=sum(mu, Fraction(0)), s=s)


def units(d: int) -> list[int]:
    return [k for k in range(1, d) if gcd(k, d) == 1]


def _pair_kind(w1: WeightVector, w2: WeightVector):
    for w in (w1, w2):
        if w.sigma == 2:
            return UNIFORMIZING, w.k
    if any(0 in w.signature for w in (w1, w2)):
        return UNITARY, None
    return UNSUPPORTED, None


def conjugate_classes(ct: CoveringType) -> list[ConjugatePair]:
    """Galois conjugate pairs ``{k, d-k}`` with ``gcd(k, d) = 1``, sorted by ``k``."""
    out = []
    for k in units(ct.d):
        if 2 * k > ct.d:
            break
        w1, w2 = weight_vector(ct, k), weight_vector(ct, ct.d - k)
        kind, rep = _pair_kind(w1, w2)
        out.append(ConjugatePair((k, ct.d - k), kind, rep, (w1.signature, w2.signature)))
    return out


def genus(ct: CoveringType) -> int:
    """Riemann-Hurwitz genus of the covering curve."""
    twice = (ct.N - 2) * ct.d + 2 - sum(gcd(x, ct.d) for x in ct.a)
    assert twice % 2 == 0 and twice >= 0, (ct, twice)
    return twice // 2


def primitive_dimensions(ct: CoveringType) -> tuple[int, int]:
    """Real dimensions of the primitive part and of its maximal unitary subsystem."""
    dim_p = dim_u = 0
    for pair in conjugate_classes(ct):
        # one real dimension per complex rank of each member character
        dim = sum(weight_vector(ct, k).rank for k in set(pair.reps))
        dim_p += dim
        if pair.kind == UNITARY:
            dim_u += dim
    return dim_p, dim_u


def is_arithmetic(ct: CoveringType) -> bool:
    """True iff every conjugate pair except ``{1, d-1}`` is unitary.

    Only meaningful when the k=1 eigenspace is the uniformizing one.
    """
    if weight_vector(ct, 1).sigma != 2:
        raise PreconditionFailed(f"sigma(1) != 2 for {ct}; k=1 is not uniformizing")
    return all(p.kind == UNITARY for p in conjugate_classes(ct) if p.reps[0] != 1)
