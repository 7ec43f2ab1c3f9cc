"""
cosbound - Extremal constants for nonnegative cosine polynomials

Computes and certifies V_n = inf (f(0) - a0) / (sqrt(a1) - sqrt(a0))**2,
taken over nonnegative cosine polynomials f of degree n with nonnegative
coefficients and a1 > a0 > 0, for 2 <= n <= 8.
"""

__version__ = "1.0.0"
__author__ = "cosbound Contributors"
__license__ = "MIT"

from .core.trigpoly import CosinePolynomial, membership_c_n, v_functional
from .extremal.pipeline import compute_vn, sweep
from .extremal.results import VnResult

__all__ = [
    "CosinePolynomial",
    "membership_c_n",
    "v_functional",
    "compute_vn",
    "sweep",
    "VnResult",
]
