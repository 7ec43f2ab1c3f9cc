"""Numerical kernels: line search, Newton, quadrature and derivative checks."""

from .golden import BracketResult, golden_section_min
from .newton import NewtonConfig, NewtonResult, newton_minimize
from .quadrature import quadrature
from .diff import finite_diff_gradient, finite_diff_hessian, finite_diff_jacobian

__all__ = [
    "BracketResult",
    "golden_section_min",
    "NewtonConfig",
    "NewtonResult",
    "newton_minimize",
    "quadrature",
    "finite_diff_gradient",
    "finite_diff_hessian",
    "finite_diff_jacobian",
]
