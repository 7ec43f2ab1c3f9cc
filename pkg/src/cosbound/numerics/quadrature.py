"""Adaptive Simpson quadrature."""

import math
from typing import Callable

from ..common.exceptions import DomainError, MaxDepthExceeded


MAX_DEPTH = 40


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width * (fa + 4.0 * fm + fb) / 6.0


def quadrature(
    integrand: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """
    Integrate a continuous function over [lo, hi].

    Each panel is split in two until the two-panel Simpson estimate agrees
    with the one-panel estimate to 15*tol (tolerance halves per split), and
    the Richardson-corrected value is kept.

    Args:
        integrand: Function of one real variable
        lo: Lower limit
        hi: Upper limit
        tol: Absolute error target

    Returns:
        Estimate of the integral

    Raises:
        MaxDepthExceeded: If a panel needs more than 40 splits
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    if lo == hi:
        return 0.0
    if lo > hi:
        return -quadrature(integrand, hi, lo, tol)

    fa, fb = integrand(lo), integrand(hi)
    mid = 0.5 * (lo + hi)
    fm = integrand(mid)
    whole = _simpson(fa, fm, fb, hi - lo)

    # explicit stack keeps recursion depth independent of the interpreter limit
    total = 0.0
    stack = [(lo, hi, fa, fm, fb, whole, tol, 0)]
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = integrand(lm), integrand(rm)
        left = _simpson(fa, flm, fm, m - a)
        right = _simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if depth >= 3 and abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
            continue
        if depth + 1 > MAX_DEPTH:
            raise MaxDepthExceeded(f"no convergence on [{a}, {b}] after {MAX_DEPTH} levels")
        if not math.isfinite(delta):
            raise DomainError(f"integrand not finite on [{a}, {b}]")
        stack.append((m, b, fm, frm, fb, right, 0.5 * eps, depth + 1))
        stack.append((a, m, fa, flm, fm, left, 0.5 * eps, depth + 1))
    return total
