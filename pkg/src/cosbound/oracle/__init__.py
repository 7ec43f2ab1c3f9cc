"""Independent oracles for verifying computed constants."""

from .penalty import one_sided_penalty_objective, one_sided_penalty_chi
from .sampling import brute_force_chi, hit_level
from .lemmas import (
    PropertyReport,
    inequality_properties,
    fourier_coefficients,
    spectral_cross_check,
)
from .audit import AuditPoint, audit, audit_point

__all__ = [
    "one_sided_penalty_objective",
    "one_sided_penalty_chi",
    "brute_force_chi",
    "hit_level",
    "PropertyReport",
    "inequality_properties",
    "fourier_coefficients",
    "spectral_cross_check",
    "AuditPoint",
    "audit",
    "audit_point",
]
