"""
Brute-force sampling upper bound for chi_n(a).

Random unit vectors are moved along the sphere until H2 = a, filtered for
the full inequality set, and the best few are polished by penalized Newton
steps and moved back onto the constraint set. Every returned value is F at
an exactly feasible point, so it bounds chi_n(a) from above.
"""

import numpy as np

from ..common.exceptions import DomainError, NoFeasibleSample, NotConverged
from ..core.trigpoly import fejer_bound
from ..extremal.kkt_solver import INEQ_TOL, shift_matrix
from ..numerics.newton import NewtonConfig, newton_minimize
from .penalty import one_sided_penalty_objective


BISECTION_STEPS = 60
POLISH_STAGES = ((1e4, 10), (1e6, 10))


def _h2(x: np.ndarray, t1: np.ndarray) -> np.ndarray:
    return np.einsum("ij,jk,ik->i", x, t1, x)


def hit_level(x: np.ndarray, a: float) -> np.ndarray:
    """
    Move unit rows of x along the sphere until x^T T_1 x = a.

    Rows below a travel toward the top eigenvector of T_1, rows above
    toward the bottom one; the path (1 - t) x + t v, renormalized, is
    bisected on t.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    size = x.shape[1]
    t1 = shift_matrix(size, 1)
    _, vecs = np.linalg.eigh(t1)
    bottom, top = vecs[:, 0], vecs[:, -1]

    level = _h2(x, t1)
    target = np.where((level < a)[:, None], top[None, :], bottom[None, :])
    # same hemisphere keeps the chord away from the origin
    target = target * np.where(np.sum(x * target, axis=1) < 0, -1.0, 1.0)[:, None]

    lo = np.zeros(x.shape[0])
    hi = np.ones(x.shape[0])
    below = level < a
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        y = (1.0 - mid)[:, None] * x + mid[:, None] * target
        y /= np.linalg.norm(y, axis=1)[:, None]
        passed = np.where(below, _h2(y, t1) >= a, _h2(y, t1) <= a)
        hi = np.where(passed, mid, hi)
        lo = np.where(passed, lo, mid)
    y = (1.0 - hi)[:, None] * x + hi[:, None] * target
    return y / np.linalg.norm(y, axis=1)[:, None]


def _feasible_mask(x: np.ndarray) -> np.ndarray:
    size = x.shape[1]
    mask = np.ones(x.shape[0], dtype=bool)
    for j in range(1, size - 1):
        mask &= np.einsum("ij,jk,ik->i", x, shift_matrix(size, j + 1), x) >= -INEQ_TOL
    return mask


def _polish(n: int, a: float, x: np.ndarray) -> np.ndarray:
    for mu, steps in POLISH_STAGES:
        cfg = NewtonConfig(grad_tol=1e-12, max_iters=steps)
        try:
            x = newton_minimize(lambda y, mu=mu: one_sided_penalty_objective(n, a, mu, y), x, cfg).x
        except NotConverged as e:
            if e.best is not None:
                x = e.best.x
    return x / np.linalg.norm(x)


def brute_force_chi(
    n: int, a: float, samples: int = 100_000, seed: int = 42, polish_count: int = 50
) -> float:
    """
    Upper bound on chi_n(a) from random feasible points.

    Raises:
        NoFeasibleSample: If no sample satisfies every inequality
    """
    if samples < 1000:
        raise DomainError("brute_force_chi needs at least 1000 samples")
    if not 1.0 < a <= fejer_bound(n):
        raise DomainError(f"a = {a} outside (1, {fejer_bound(n)}]")
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), int(n), int(round(a * 1e9))]))
    size = n + 1
    raw = rng.standard_normal((samples, size))
    raw /= np.linalg.norm(raw, axis=1)[:, None]
    points = hit_level(raw, a)
    points = points[_feasible_mask(points)]
    if points.shape[0] == 0:
        raise NoFeasibleSample(f"no feasible sample for n={n}, a={a} among {samples}")

    values = np.sum(points, axis=1) ** 2 - 1.0
    order = np.argsort(values, kind="stable")
    best = float(values[order[0]])
    for i in order[:polish_count]:
        polished = hit_level(_polish(n, a, points[i]), a)
        if _feasible_mask(polished)[0]:
            best = min(best, float(np.sum(polished[0]) ** 2 - 1.0))
    return best
