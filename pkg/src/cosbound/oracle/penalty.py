"""
One-sided penalty formulation over the full constraint set.

Unlike the active-set subproblems, every inequality G_j >= 0 (j = 1..n-1)
enters as max(-G_j, 0)^2, so a single continuation run solves the full
problem without enumerating active sets.
"""

from typing import Iterable

import numpy as np

from ..common.exceptions import AllStartsFailed, DomainError, NotConverged
from ..common.logging import get_logger
from ..extremal.kkt_solver import (
    EQ_TOL,
    INEQ_TOL,
    PenaltySchedule,
    inequality_values,
    ones_matrix,
    quadratic_form,
    shift_matrix,
)
from ..numerics.newton import newton_minimize


def one_sided_penalty_objective(
    n: int, a: float, mu: float, x: np.ndarray
) -> tuple[float, np.ndarray, np.ndarray]:
    """
    F + mu [(H1 - 1)^2 + (H2 - a)^2 + sum_j max(-G_j, 0)^2].

    Returns:
        Tuple of (value, gradient, Hessian); the Hessian is the one-sided
        second derivative where some G_j = 0
    """
    x = np.asarray(x, dtype=float)
    size = n + 1
    if x.size != size:
        raise DomainError(f"x has length {x.size}, expected {size}")
    s = float(np.sum(x))
    value = s * s - 1.0
    grad = np.full(size, 2.0 * s)
    hess = 2.0 * ones_matrix(size)

    terms = [(shift_matrix(size, 0), 1.0, False), (shift_matrix(size, 1), a, False)]
    terms.extend((shift_matrix(size, j + 1), 0.0, True) for j in range(1, n))
    for m, target, one_sided in terms:
        mx = m @ x
        r = float(x @ mx) - target
        if one_sided and r >= 0.0:
            continue
        g = 2.0 * mx
        value += mu * r * r
        grad = grad + (2.0 * mu * r) * g
        hess = hess + mu * (2.0 * np.outer(g, g) + 4.0 * r * m)
    return value, grad, hess


def one_sided_minimize(
    n: int, a: float, schedule: PenaltySchedule, start: np.ndarray
) -> np.ndarray:
    """Continuation run from one start; returns the final-stage minimizer."""
    x = np.asarray(start, dtype=float)
    x = x / np.linalg.norm(x)
    for mu in schedule.mu_values:
        result = newton_minimize(
            lambda y, mu=mu: one_sided_penalty_objective(n, a, mu, y), x, schedule.newton
        )
        x = result.x
    return x


def one_sided_penalty_chi(
    n: int, a: float, schedule: PenaltySchedule, starts: Iterable[np.ndarray]
) -> float:
    """
    Smallest F over converged, feasible one-sided runs.

    Raises:
        AllStartsFailed: If no start ends feasible
    """
    best = np.inf
    for index, start in enumerate(starts):
        try:
            x = one_sided_minimize(n, a, schedule, start)
        except NotConverged as e:
            get_logger().debug(f"one-sided n={n} a={a:.9f} start {index}: {e}")
            continue
        size = n + 1
        if abs(quadratic_form(shift_matrix(size, 0), x) - 1.0) > EQ_TOL:
            continue
        if abs(quadratic_form(shift_matrix(size, 1), x) - a) > EQ_TOL:
            continue
        if any(v < -INEQ_TOL for v in inequality_values(x).values()):
            continue
        best = min(best, float(np.sum(x)) ** 2 - 1.0)
    if not np.isfinite(best):
        raise AllStartsFailed(f"one-sided penalty found no feasible point for n={n}, a={a}")
    return float(best)
