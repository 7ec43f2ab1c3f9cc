"""
Damped Newton minimization with Hessian regularization.

The objective callable returns ``(value, gradient, hessian)``. Every step
solves a Cholesky-regularized Newton system and is accepted only after a
backtracking line search finds a non-increasing value.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from ..common.exceptions import NotConverged


Objective = Callable[[np.ndarray], tuple[float, np.ndarray, np.ndarray]]

MAX_HALVINGS = 60


@dataclass(frozen=True)
class NewtonConfig:
    """Stopping and damping parameters for newton_minimize."""

    grad_tol: float = 1e-10
    max_iters: int = 500
    damping: float = 1.0
    hessian_regularization: float = 1e-8
    step_tol: float = 1e-13

    def __post_init__(self):
        if self.grad_tol <= 0:
            raise ValueError("grad_tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if not 0 < self.damping <= 1:
            raise ValueError("damping must lie in (0, 1]")
        if self.hessian_regularization < 0:
            raise ValueError("hessian_regularization must be nonnegative")


@dataclass(frozen=True)
class NewtonResult:
    """Final iterate of a Newton run."""

    x: np.ndarray
    value: float
    grad_norm: float
    iters: int
    converged: bool


def _newton_direction(grad: np.ndarray, hess: np.ndarray, base_reg: float) -> np.ndarray:
    """Solve (H + tau I) d = -g with the smallest tau that is positive definite."""
    scale = 1.0 + float(np.max(np.abs(np.diag(hess))))
    tau = 0.0
    eye = np.eye(grad.size)
    for _ in range(40):
        try:
            factor = cho_factor(hess + tau * eye, lower=True, check_finite=False)
            direction = -cho_solve(factor, grad, check_finite=False)
            if np.all(np.isfinite(direction)) and direction @ grad < 0:
                return direction
        except LinAlgError:
            pass
        tau = max(base_reg * scale, 10.0 * tau)
    return -grad


def newton_minimize(
    objective: Objective, x0: np.ndarray, cfg: NewtonConfig = NewtonConfig()
) -> NewtonResult:
    """
    Minimize a twice-differentiable function from x0.

    Converges when the gradient norm drops below grad_tol * (1 + |value|),
    when an accepted step is shorter than step_tol * (1 + |x|), or when the
    model decrease falls below the roundoff level of the value.

    Args:
        objective: Returns (value, gradient, hessian) at a point
        x0: Start vector
        cfg: Stopping and damping parameters

    Returns:
        NewtonResult for the converged point

    Raises:
        NotConverged: After max_iters, or when the line search fails;
            ``best`` carries the last accepted NewtonResult
    """
    x = np.array(x0, dtype=float)
    value, grad, hess = objective(x)
    grad_norm = float(np.linalg.norm(grad))

    for it in range(cfg.max_iters):
        if grad_norm <= cfg.grad_tol * (1.0 + abs(value)):
            return NewtonResult(x, value, grad_norm, it, True)

        direction = _newton_direction(grad, hess, cfg.hessian_regularization)
        slope = float(direction @ grad)
        roundoff = 1e-14 * (1.0 + abs(value))
        if -slope <= roundoff:
            return NewtonResult(x, value, grad_norm, it, True)

        step = cfg.damping
        for _ in range(MAX_HALVINGS):
            trial = x + step * direction
            trial_value, trial_grad, trial_hess = objective(trial)
            if np.isfinite(trial_value) and trial_value <= value + 1e-4 * step * slope:
                break
            step *= 0.5
        else:
            best = NewtonResult(x, value, grad_norm, it, False)
            # a failed search that cannot move the point is a stationary stop
            if step * float(np.linalg.norm(direction)) <= cfg.step_tol * (1.0 + float(np.linalg.norm(x))):
                return NewtonResult(x, value, grad_norm, it, True)
            raise NotConverged("line search failed after 60 halvings", best=best)

        moved = step * float(np.linalg.norm(direction))
        x, value, grad, hess = trial, trial_value, trial_grad, trial_hess
        grad_norm = float(np.linalg.norm(grad))
        if moved <= cfg.step_tol * (1.0 + float(np.linalg.norm(x))):
            return NewtonResult(x, value, grad_norm, it + 1, True)

    if grad_norm <= cfg.grad_tol * (1.0 + abs(value)):
        return NewtonResult(x, value, grad_norm, cfg.max_iters, True)
    raise NotConverged(
        f"no convergence after {cfg.max_iters} iterations (|g| = {grad_norm:.3e})",
        best=NewtonResult(x, value, grad_norm, cfg.max_iters, False),
    )
