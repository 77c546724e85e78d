"""One-shot analysis of a covering type and its lossless JSON form.

Rationals are always serialized as ``"p/q"`` strings (``"1"`` for integers).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .classify import trace_field
from .conditions import check_sigma_int, model_label
from .covering import (
    CoveringType,
    conjugate_classes,
    genus,
    is_arithmetic,
    primitive_dimensions,
    units,
    weight_vector,
)
from .errors import BadWeightSum, DMError
from .euler import bmy_check
from .lyapunov import spectrum


@dataclass(frozen=True)
class Conjugate:
    k: int
    mu: tuple[Fraction, ...]
    signature: tuple[int, int]
    kind: str
    lam: Fraction | None


@dataclass(frozen=True)
class AnalysisRecord:
    input: str
    condition: dict | None           # {"tag", "S", "parabolic", "contracted"}
    conjugates: tuple[Conjugate, ...]
    spectrum: tuple[Fraction, ...] | None
    relative_euler: tuple[Fraction, ...] | None
    euler: dict | None               # {"e_orb", "c1_sq", "bmy"}
    trace_field: dict
    model: str | None
    genus: int
    dim_P: int
    dim_U: int
    arithmetic: bool | None

    @property
    def is_lattice(self) -> bool:
        return self.condition is not None and self.condition["tag"] != "neither"


def analyze(ct: CoveringType) -> AnalysisRecord:
    """Everything computable for ``ct``; lattice-only parts are None otherwise."""
    mu1 = weight_vector(ct, 1)
    condition = report = None
    if mu1.sigma == 2:
        report = check_sigma_int(ct.mu)
        condition = {
            "tag": report.condition,
            "S": list(report.S) if report.S else None,
            "parabolic": [list(p) for p in report.parabolic_pairs],
            "contracted": [list(p) for p in report.contracted_pairs],
        }
    spec = None
    lam_of = {}
    if report is not None and report.is_lattice:
        try:
            spec = spectrum(ct)
        except DMError:
            spec = None
        if spec is not None:
            for p in spec.pairs:
                for k in p.reps:
                    lam_of[k] = p.lam
    kinds = {k: cp.kind for cp in conjugate_classes(ct) for k in cp.reps}
    conj = tuple(
        Conjugate(k, weight_vector(ct, k).mu, weight_vector(ct, k).signature, kinds[k], lam_of.get(k))
        for k in units(ct.d)
    )
    euler = None
    if ct.N == 5:
        try:
            rep = bmy_check(ct.mu)
            euler = {"e_orb": rep.e_orb, "c1_sq": rep.c1_sq, "bmy": rep.bmy_holds}
        except (BadWeightSum, ValueError):
            euler = None
    tf = trace_field(ct.d)
    dim_p, dim_u = primitive_dimensions(ct)
    return AnalysisRecord(
        input=str(ct),
        condition=condition,
        conjugates=conj,
        spectrum=spec.distinct_nonnegative if spec else None,
        relative_euler=spec.relative_euler if spec else None,
        euler=euler,
        trace_field={"canonical_d": tf.canonical_d, "degree": tf.degree},
        model=model_label(report) if report is not None else None,
        genus=genus(ct),
        dim_P=dim_p,
        dim_U=dim_u,
        arithmetic=is_arithmetic(ct) if mu1.sigma == 2 else None,
    )


# -- JSON ---------------------------------------------------------------------

def q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _qs(xs):
    return None if xs is None else [q(x) for x in xs]


def to_json_obj(rec: AnalysisRecord) -> dict:
    return {
        "input": rec.input,
        "condition": rec.condition,
        "conjugates": [
            {"k": c.k, "mu": _qs(c.mu), "signature": list(c.signature), "kind": c.kind,
             "lambda": None if c.lam is None else q(c.lam)}
            for c in rec.conjugates
        ],
        "spectrum": _qs(rec.spectrum),
        "relative_euler": _qs(rec.relative_euler),
        "euler": None if rec.euler is None else
        {"e_orb": q(rec.euler["e_orb"]), "c1_sq": q(rec.euler["c1_sq"]), "bmy": rec.euler["bmy"]},
        "trace_field": dict(rec.trace_field),
        "model": rec.model,
        "genus": rec.genus,
        "dim_P": rec.dim_P,
        "dim_U": rec.dim_U,
        "arithmetic": rec.arithmetic,
    }


def render(rec: AnalysisRecord, indent: int | None = 2) -> str:
    return json.dumps(to_json_obj(rec), indent=indent)


def _fs(xs):
    return None if xs is None else tuple(Fraction(x) for x in xs)


def from_json_obj(obj: dict) -> AnalysisRecord:
    euler = obj.get("euler")
    if euler is not None:
        euler = {"e_orb": Fraction(euler["e_orb"]), "c1_sq": Fraction(euler["c1_sq"]), "bmy": euler["bmy"]}
    return AnalysisRecord(
        input=obj["input"],
        condition=obj["condition"],
        conjugates=tuple(
            Conjugate(c["k"], _fs(c["mu"]), tuple(c["signature"]), c["kind"],
                      None if c["lambda"] is None else Fraction(c["lambda"]))
            for c in obj["conjugates"]
        ),
        spectrum=_fs(obj["spectrum"]),
        relative_euler=_fs(obj["relative_euler"]),
        euler=euler,
        trace_field=dict(obj["trace_field"]),
        model=obj["model"],
        genus=obj["genus"],
        dim_P=obj["dim_P"],
        dim_U=obj["dim_U"],
        arithmetic=obj["arithmetic"],
    )


def parse(text: str) -> AnalysisRecord:
    return from_json_obj(json.loads(text))


# JSON schema of ``render`` output (draft 2020-12), for consumers.
RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "condition", "conjugates", "spectrum", "relative_euler",
                 "euler", "trace_field", "model"],
    "properties": {
        "input": {"type": "string"},
        "condition": {"type": ["object", "null"]},
        "conjugates": {"type": "array", "items": {
            "type": "object",
            "required": ["k", "mu", "signature", "lambda"],
            "properties": {
                "k": {"type": "integer"},
                "mu": {"type": "array", "items": RATIONAL},
                "signature": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                "lambda": {"anyOf": [RATIONAL, {"type": "null"}]},
            }}},
        "spectrum": {"anyOf": [{"type": "array", "items": RATIONAL}, {"type": "null"}]},
        "relative_euler": {"anyOf": [{"type": "array", "items": RATIONAL}, {"type": "null"}]},
        "euler": {"anyOf": [{"type": "null"}, {
            "type": "object", "required": ["e_orb", "c1_sq", "bmy"],
            "properties": {"e_orb": RATIONAL, "c1_sq": RATIONAL, "bmy": {"type": "boolean"}}}]},
        "trace_field": {"type": "object", "required": ["canonical_d", "degree"]},
        "model": {"type": ["string", "null"]},
    },
}
