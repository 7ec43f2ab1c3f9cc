"""Golden-section search for unimodal functions of one variable."""

import math
from dataclasses import dataclass
from typing import Callable

from ..common.exceptions import DomainError


INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


@dataclass(frozen=True)
class BracketResult:
    """Outcome of a bracketing search."""

    x_star: float
    f_star: float
    bracket_width: float


def golden_section_min(
    objective: Callable[[float], float], lo: float, hi: float, tol: float = 1e-9
) -> BracketResult:
    """
    Minimize a unimodal function on [lo, hi].

    The bracket shrinks by 1/phi per evaluation until its width is at most
    tol; the returned point is the best evaluated point inside the final bracket, so
    ties resolve toward the left end.

    Args:
        objective: Function to minimize
        lo: Left end of the bracket
        hi: Right end of the bracket
        tol: Final bracket width

    Returns:
        BracketResult with the minimizer estimate and its value
    """
    if not lo < hi:
        raise DomainError(f"empty bracket [{lo}, {hi}]")
    if tol <= 0:
        raise DomainError("tol must be positive")

    a, b = lo, hi
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return BracketResult(x, objective(x), h)

    # Required steps to achieve tolerance
    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = objective(c)
    yd = objective(d)

    for _ in range(steps):
        if yc <= yd:
            b = d
            d, yd = c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = objective(c)
        else:
            a = c
            c, yc = d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = objective(d)

    if yc <= yd:
        return BracketResult(c, yc, b - a)
    return BracketResult(d, yd, b - a)
