"""Exact Lyapunov spectra and commensurability invariants of Deligne-Mostow
ball-quotient lattices coming from cyclic coverings of the projective line."""

from .covering import CoveringType, conjugate_classes, genus, parse_type, primitive_dimensions, validate_type, weight_vector
from .conditions import check_sigma_int, enumerate_types, lattice_condition
from .lyapunov import cab_invariants, lambda1, spectrum
from .euler import bmy_check, orb_euler, relative_euler
from .classify import invariants, partition, trace_field

__all__ = [
    "CoveringType", "conjugate_classes", "genus", "parse_type", "primitive_dimensions",
    "validate_type", "weight_vector", "check_sigma_int", "enumerate_types", "lattice_condition",
    "cab_invariants", "lambda1", "spectrum", "bmy_check", "orb_euler", "relative_euler",
    "invariants", "partition", "trace_field",
]
