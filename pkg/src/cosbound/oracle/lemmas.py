"""Randomized checks of the elementary ratio and square-root inequalities."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from ..core.trigpoly import from_spectral_factor, spectral_value


EQUALITY_TOL = 1e-12


@dataclass(frozen=True)
class PropertyReport:
    """Pass counts of the randomized inequality checks."""

    trials: int
    mediant: int
    aggregation: int
    sqrt_product: int
    sqrt_equality: int

    @property
    def passed(self) -> bool:
        return self.trials == self.mediant == self.aggregation == self.sqrt_product == self.sqrt_equality

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "mediant": self.mediant,
            "aggregation": self.aggregation,
            "sqrt_product": self.sqrt_product,
            "sqrt_equality": self.sqrt_equality,
            "passed": self.passed,
        }


def mediant_holds(a: float, b: float, da: float, db: float) -> bool:
    """da/db > a/b implies (a + da)/(b + db) > a/b."""
    if not da / db > a / b:
        return True
    return (a + da) / (b + db) > a / b


def aggregation_holds(a1: float, b1: float, a2: float, b2: float, k: float) -> bool:
    """a1/b1 > k and a2/b2 > k imply (a1 + a2)/(b1 + b2) > k."""
    if not (a1 / b1 > k and a2 / b2 > k):
        return True
    return (a1 + a2) / (b1 + b2) > k


def sqrt_product_gap(a: float, b: float, da: float, db: float) -> float:
    """sqrt((a + da)(b + db)) - sqrt(ab) - sqrt(da db), never negative."""
    return math.sqrt((a + da) * (b + db)) - math.sqrt(a * b) - math.sqrt(da * db)


def inequality_properties(trials: int = 10_000, seed: int = 42) -> PropertyReport:
    """
    Check the ratio and square-root inequalities on random positive inputs.

    The square-root inequality is also checked for equality on inputs with
    a db = b da, to relative 1e-12.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    mediant = aggregation = sqrt_product = sqrt_equality = 0
    for _ in range(trials):
        a, b, da, db = (float(v) for v in rng.uniform(0.01, 10.0, 4))
        # force the premise da/db > a/b
        if da / db <= a / b:
            da = db * (a / b) * (1.0 + float(rng.uniform(0.01, 1.0)))
        mediant += mediant_holds(a, b, da, db)

        b1, b2 = (float(v) for v in rng.uniform(0.01, 10.0, 2))
        k = float(rng.uniform(0.01, 10.0))
        a1 = b1 * k * (1.0 + float(rng.uniform(0.01, 1.0)))
        a2 = b2 * k * (1.0 + float(rng.uniform(0.01, 1.0)))
        aggregation += aggregation_holds(a1, b1, a2, b2, k)

        sqrt_product += sqrt_product_gap(a, b, da, db) >= -EQUALITY_TOL * (1.0 + a + b + da + db)

        scale = float(rng.uniform(0.01, 10.0))
        gap = sqrt_product_gap(a, b, scale * a, scale * b)
        sqrt_equality += abs(gap) <= EQUALITY_TOL * math.sqrt((1.0 + scale) ** 2 * a * b)
    return PropertyReport(trials, mediant, aggregation, sqrt_product, sqrt_equality)


def fourier_coefficients(x, tol: float = 1e-12) -> np.ndarray:
    """Cosine coefficients of |sum x_k e^{ik phi}|^2 by numerical integration."""
    x = np.asarray(x, dtype=float)
    n = x.size - 1
    coeffs = np.empty(n + 1)
    for k in range(n + 1):
        value, _ = quad(
            lambda phi: spectral_value(x, phi) * math.cos(k * phi),
            0.0,
            2.0 * math.pi,
            epsabs=tol,
            epsrel=tol,
            limit=200,
        )
        coeffs[k] = value / (2.0 * math.pi if k == 0 else math.pi)
    return coeffs


def spectral_cross_check(n: int, trials: int = 100, seed: int = 42) -> float:
    """Largest deviation between the coefficient map and integrated coefficients."""
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), int(n)]))
    worst = 0.0
    for _ in range(trials):
        x = rng.uniform(-1.0, 1.0, n + 1)
        mapped = from_spectral_factor(x).as_array()
        worst = max(worst, float(np.max(np.abs(fourier_coefficients(x) - mapped))))
    return worst
