"""Core polynomial algebra and shared record formats for cosbound."""

from .trigpoly import (
    CosinePolynomial,
    SpectralFactor,
    MembershipReport,
    Condition,
    evaluate,
    v_functional,
    zero_free_constant,
    from_spectral_factor,
    spectral_value,
    expand_product,
    grid_minimum,
    membership_c_n,
    class_c0_membership,
    fejer_bound,
)
from .records import (
    Colors,
    colorize,
    format_constant,
    serialize_record,
    parse_polynomial,
    polynomial_record,
    rows_to_csv,
)

__all__ = [
    "CosinePolynomial",
    "SpectralFactor",
    "MembershipReport",
    "Condition",
    "evaluate",
    "v_functional",
    "zero_free_constant",
    "from_spectral_factor",
    "spectral_value",
    "expand_product",
    "grid_minimum",
    "membership_c_n",
    "class_c0_membership",
    "fejer_bound",
    "Colors",
    "colorize",
    "format_constant",
    "serialize_record",
    "parse_polynomial",
    "polynomial_record",
    "rows_to_csv",
]
