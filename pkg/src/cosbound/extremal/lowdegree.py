"""
Closed-form searches for the degree 2 and 3 constants.

The degree 2 extremal family is (cos phi + alpha)^2 and the degree 3
family is 4 (cos phi + alpha)^2 (cos phi + 1); both reduce to a
one-parameter minimization carried out by golden-section search.
"""

import math
import time
from typing import Callable

import numpy as np

from ..common.exceptions import DomainError
from ..common.logging import get_logger
from ..core.trigpoly import (
    expand_product,
    fejer_bound,
    membership_c_n,
    v_functional,
)
from ..numerics.golden import golden_section_min
from .results import CertificateReport, VnResult


V2_ALPHA_LO = 1.0 - 1.0 / math.sqrt(2.0)
V3_ALPHA_LO = -0.25
EDGE = 1e-12
GOLDEN_TOL = 1e-9
SCAN_POINTS = 10_000


def v2_objective(alpha: float) -> float:
    """v(f) for f = (cos phi + alpha)^2, valid on (1 - 1/sqrt 2, 1]."""
    if not V2_ALPHA_LO < alpha <= 1.0:
        raise DomainError(f"alpha = {alpha} outside (1 - 1/sqrt(2), 1]")
    return (0.5 + 2.0 * alpha) / (math.sqrt(2.0 * alpha) - math.sqrt(alpha * alpha + 0.5)) ** 2


def v3_objective(alpha: float) -> float:
    """v(f) for f = 4 (cos phi + alpha)^2 (cos phi + 1), valid on (-1/4, 1]."""
    if not V3_ALPHA_LO < alpha <= 1.0:
        raise DomainError(f"alpha = {alpha} outside (-1/4, 1]")
    a2 = alpha * alpha
    num = 4.0 * a2 + 12.0 * alpha + 6.0
    den = math.sqrt(4.0 * a2 + 8.0 * alpha + 3.0) - math.sqrt(4.0 * a2 + 4.0 * alpha + 2.0)
    return num / den**2


def c3_membership(alpha: float, beta: float) -> bool:
    """Whether (cos phi + alpha)^2 (cos phi + beta) has the double-root class property."""
    if alpha >= V2_ALPHA_LO:
        return True
    if alpha <= V3_ALPHA_LO:
        return False
    threshold = 1.0 + (4.0 * alpha + 1.0) / (4.0 * alpha * alpha - 8.0 * alpha + 2.0)
    return beta < threshold


def delta_ratio_lower(alpha: float) -> float:
    """Lower bound (8a + 2) / (4a^2 + 8a + 2 - 2 sqrt(8a (4a^2 + 2))) on [1 - 1/sqrt 2, 1]."""
    if not V2_ALPHA_LO - EDGE <= alpha <= 1.0:
        raise DomainError(f"alpha = {alpha} outside [1 - 1/sqrt(2), 1]")
    a2 = alpha * alpha
    den = 4.0 * a2 + 8.0 * alpha + 2.0 - 2.0 * math.sqrt(8.0 * alpha * (4.0 * a2 + 2.0))
    if den <= 0.0:
        return math.inf
    return (8.0 * alpha + 2.0) / den


def quadratic_family(alpha: float):
    """Coefficients of (cos phi + alpha)^2."""
    return expand_product([(alpha, 1.0), (alpha, 1.0)])


def cubic_family(alpha: float, beta: float, scale: float = 1.0):
    """Coefficients of scale * (cos phi + alpha)^2 (cos phi + beta)."""
    return expand_product([(scale,), (alpha, 1.0), (alpha, 1.0), (beta, 1.0)])


def cubic_family_v(alpha: float, beta: float) -> float:
    """v(f) for (cos phi + alpha)^2 (cos phi + beta)."""
    return v_functional(cubic_family(alpha, beta))


def scan_objective(
    objective: Callable[[float], float], lo: float, hi: float, points: int = SCAN_POINTS
) -> tuple[float, float]:
    """
    Evaluate an objective on a uniform grid over [lo, hi].

    Returns:
        Tuple of (argmin, minimum value) over the grid
    """
    grid = np.linspace(lo, hi, points)
    values = np.array([objective(float(t)) for t in grid])
    best = int(np.argmin(values))
    return float(grid[best]), float(values[best])


def _minimize_family(
    objective: Callable[[float], float], lo: float, hi: float, name: str
) -> tuple[float, float]:
    scan_x, scan_v = scan_objective(objective, lo, hi)
    res = golden_section_min(objective, lo, hi, GOLDEN_TOL)
    if res.f_star > scan_v + 10.0 * GOLDEN_TOL:
        raise DomainError(
            f"{name}: search minimum {res.f_star:.9f} above scan minimum "
            f"{scan_v:.9f} at {scan_x:.6f}; objective is not unimodal"
        )
    return res.x_star, res.f_star


def _closed_form_result(n: int, alpha: float, witness, started: float) -> VnResult:
    membership = membership_c_n(witness)
    certificate = CertificateReport(
        passed=membership.in_class,
        membership=membership,
        failures=tuple(c.value for c in membership.violated_conditions),
    )
    return VnResult(
        n=n,
        interval=(1.0, fejer_bound(n)),
        v_value=v_functional(witness),
        a_star=witness[1] / witness[0],
        witness=witness,
        certificate=certificate,
        alpha_star=alpha,
        runtime=time.perf_counter() - started,
    )


def compute_v2() -> VnResult:
    """Minimize v over the quadratic family."""
    started = time.perf_counter()
    alpha, value = _minimize_family(v2_objective, V2_ALPHA_LO + EDGE, 1.0 - EDGE, "v2")
    get_logger().info(f"V_2 search: alpha* = {alpha:.9f}, v = {value:.9f}")
    return _closed_form_result(2, alpha, quadratic_family(alpha), started)


def compute_v3() -> VnResult:
    """Minimize v over the cubic family with beta = 1."""
    started = time.perf_counter()
    alpha, value = _minimize_family(v3_objective, V3_ALPHA_LO + EDGE, 1.0, "v3")
    get_logger().info(f"V_3 search: alpha* = {alpha:.9f}, v = {value:.9f}")
    return _closed_form_result(3, alpha, cubic_family(alpha, 1.0, scale=4.0), started)
