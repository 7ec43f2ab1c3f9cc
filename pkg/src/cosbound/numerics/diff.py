"""Central finite differences, used to check analytic derivatives."""

from typing import Callable

import numpy as np

from ..common.exceptions import DomainError


def finite_diff_gradient(
    objective: Callable[[np.ndarray], float], x: np.ndarray, h: float = 1e-6
) -> np.ndarray:
    """Central-difference gradient of a scalar function."""
    if h <= 0:
        raise DomainError("h must be positive")
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        grad[i] = (objective(x + e) - objective(x - e)) / (2.0 * h)
    return grad


def finite_diff_hessian(
    objective: Callable[[np.ndarray], float], x: np.ndarray, h: float = 1e-4
) -> np.ndarray:
    """
    Central-difference Hessian of a scalar function.

    Uses the four-point formula for mixed partials and the three-point
    formula on the diagonal; the result is symmetrized.
    """
    if h <= 0:
        raise DomainError("h must be positive")
    x = np.asarray(x, dtype=float)
    size = x.size
    f0 = objective(x)
    hess = np.empty((size, size))
    eye = np.eye(size) * h
    for i in range(size):
        hess[i, i] = (objective(x + eye[i]) - 2.0 * f0 + objective(x - eye[i])) / h**2
        for j in range(i + 1, size):
            fpp = objective(x + eye[i] + eye[j])
            fpm = objective(x + eye[i] - eye[j])
            fmp = objective(x - eye[i] + eye[j])
            fmm = objective(x - eye[i] - eye[j])
            hess[i, j] = hess[j, i] = (fpp - fpm - fmp + fmm) / (4.0 * h**2)
    return hess


def finite_diff_jacobian(
    gradient: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float = 1e-6
) -> np.ndarray:
    """Central-difference Jacobian of a gradient map (a Hessian check)."""
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        cols.append((gradient(x + e) - gradient(x - e)) / (2.0 * h))
    jac = np.column_stack(cols)
    return 0.5 * (jac + jac.T)
