"""
Cosine-polynomial algebra.

A cosine polynomial f(phi) = sum a_k cos(k phi) is stored by its
coefficient vector (a_0, ..., a_n). A spectral factor x = (x_0, ..., x_n)
induces the nonnegative polynomial |sum x_k e^{ik phi}|^2.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

import numpy as np

from ..common.exceptions import DomainError
from ..numerics.golden import golden_section_min


GRID_POINTS = 4096
DEFAULT_TOL = 1e-9
MAX_REFINED = 16


@dataclass(frozen=True)
class CosinePolynomial:
    """Coefficients a_0..a_n of sum a_k cos(k phi)."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise DomainError("a cosine polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float]) -> "CosinePolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    def __getitem__(self, k: int) -> float:
        return self.coeffs[k] if k < len(self.coeffs) else 0.0

    def scaled(self, factor: float) -> "CosinePolynomial":
        return CosinePolynomial(tuple(factor * c for c in self.coeffs))

    def padded(self, degree: int) -> "CosinePolynomial":
        """Return the same polynomial with zero coefficients up to degree."""
        extra = max(0, degree - self.degree)
        return CosinePolynomial(self.coeffs + (0.0,) * extra)


@dataclass(frozen=True)
class SpectralFactor:
    """Real vector x with f(phi) = |sum x_k e^{ik phi}|^2."""

    entries: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(float(v) for v in self.entries))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)


class Condition(Enum):
    """Membership conditions that a polynomial can violate."""

    NEGATIVE_COEFFICIENT = "negative-coefficient"
    ORDER_VIOLATION = "order-violation"
    NEGATIVE_VALUE = "negative-value"


@dataclass(frozen=True)
class MembershipReport:
    """Verdict of membership_c_n."""

    in_class: bool
    violated_conditions: tuple[Condition, ...] = field(default_factory=tuple)
    min_value: float = 0.0
    min_location: float = 0.0

    def to_dict(self) -> dict:
        return {
            "in_class": self.in_class,
            "violated_conditions": [c.value for c in self.violated_conditions],
            "min_value": self.min_value,
            "min_location": self.min_location,
        }


PolyLike = Union[CosinePolynomial, Sequence[float], np.ndarray]


def _coeffs(poly: PolyLike) -> np.ndarray:
    if isinstance(poly, CosinePolynomial):
        return poly.as_array()
    return np.asarray(poly, dtype=float)


def evaluate(poly: PolyLike, phi):
    """
    Evaluate sum a_k cos(k phi).

    Terms are accumulated in ascending k so results are reproducible;
    phi may be a scalar or an array.
    """
    coeffs = _coeffs(poly)
    phi = np.asarray(phi, dtype=float)
    total = np.zeros_like(phi)
    for k, a in enumerate(coeffs):
        total = total + a * np.cos(k * phi)
    return float(total) if total.ndim == 0 else total


def v_functional(poly: PolyLike) -> float:
    """
    Return (f(0) - a_0) / (sqrt(a_1) - sqrt(a_0))^2.

    Raises:
        DomainError: Unless a_1 > a_0 > 0
    """
    coeffs = _coeffs(poly)
    if coeffs.size < 2:
        raise DomainError("v(f) needs degree at least 1")
    a0, a1 = coeffs[0], coeffs[1]
    if not a0 > 0:
        raise DomainError(f"v(f) needs a_0 > 0, got {a0}")
    if not a1 > a0:
        raise DomainError(f"v(f) needs a_1 > a_0, got a_1 = {a1}, a_0 = {a0}")
    f0 = float(np.sum(coeffs[1:])) + a0
    return (f0 - a0) / (math.sqrt(a1) - math.sqrt(a0)) ** 2


def zero_free_constant(poly: PolyLike) -> float:
    """Zero-free region constant R = v(f) / 2."""
    return 0.5 * v_functional(poly)


def from_spectral_factor(x: Union[SpectralFactor, Sequence[float], np.ndarray]) -> CosinePolynomial:
    """
    Map a spectral factor to its cosine polynomial.

    a_0 = sum x_k^2 and a_j = 2 sum_k x_k x_{k+j} for j >= 1.
    """
    if isinstance(x, SpectralFactor):
        x = x.as_array()
    x = np.asarray(x, dtype=float)
    n = x.size - 1
    coeffs = [float(x @ x)]
    for j in range(1, n + 1):
        coeffs.append(2.0 * float(x[: n + 1 - j] @ x[j:]))
    return CosinePolynomial(tuple(coeffs))


def spectral_value(x: Sequence[float], phi):
    """Evaluate |sum x_k e^{ik phi}|^2 directly."""
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    z = np.zeros(phi.shape, dtype=complex)
    for k, xk in enumerate(x):
        z = z + xk * np.exp(1j * k * phi)
    value = np.abs(z) ** 2
    return float(value) if value.ndim == 0 else value


def expand_product(factors: Iterable[PolyLike]) -> CosinePolynomial:
    """
    Multiply cosine polynomials.

    Uses cos(j phi) cos(k phi) = (cos((j+k) phi) + cos((j-k) phi)) / 2.
    """
    result = np.array([1.0])
    for factor in factors:
        other = _coeffs(factor)
        out = np.zeros(result.size + other.size - 1)
        for j, aj in enumerate(result):
            for k, bk in enumerate(other):
                out[j + k] += 0.5 * aj * bk
                out[abs(j - k)] += 0.5 * aj * bk
        result = out
    return CosinePolynomial(tuple(result))


def grid_minimum(poly: PolyLike, grid_points: int = GRID_POINTS) -> tuple[float, float]:
    """
    Locate the minimum of f over one period.

    Every local minimum of a uniform grid is refined by golden-section
    search on its two neighbouring cells.

    Returns:
        Tuple of (minimum value, location in [0, 2 pi))
    """
    coeffs = _coeffs(poly)
    step = 2.0 * math.pi / grid_points
    phis = np.arange(grid_points) * step
    values = evaluate(coeffs, phis)
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    candidates = np.flatnonzero((values <= left) & (values <= right))
    # flat stretches mark every point; only the lowest few need refining
    candidates = candidates[np.argsort(values[candidates], kind="stable")][:MAX_REFINED]

    best_value = float(values[int(np.argmin(values))])
    best_phi = float(phis[int(np.argmin(values))])
    for i in candidates:
        center = phis[i]
        res = golden_section_min(
            lambda t: evaluate(coeffs, t), center - step, center + step, tol=1e-12
        )
        if res.f_star < best_value:
            best_value = res.f_star
            best_phi = res.x_star % (2.0 * math.pi)
    return best_value, best_phi


def membership_c_n(poly: PolyLike, tol: float = DEFAULT_TOL) -> MembershipReport:
    """
    Check membership of f in C_n.

    Conditions: every coefficient nonnegative, a_1 > a_0 > 0, and f >= 0
    everywhere (within tol).
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    coeffs = _coeffs(poly)
    violated = []
    if np.any(coeffs < -tol):
        violated.append(Condition.NEGATIVE_COEFFICIENT)
    a0 = coeffs[0]
    a1 = coeffs[1] if coeffs.size > 1 else 0.0
    if not (a0 > 0 and a1 > a0):
        violated.append(Condition.ORDER_VIOLATION)
    min_value, min_location = grid_minimum(coeffs)
    if min_value < -tol:
        violated.append(Condition.NEGATIVE_VALUE)
    return MembershipReport(
        in_class=not violated,
        violated_conditions=tuple(violated),
        min_value=min_value,
        min_location=min_location,
    )


def class_c0_membership(poly: PolyLike, tol: float = DEFAULT_TOL, root_tol: float = 1e-7) -> bool:
    """True when f is in C_n and its minimum over a period is zero (a double root)."""
    report = membership_c_n(poly, tol)
    return report.in_class and abs(report.min_value) <= root_tol


def fejer_bound(n: int) -> float:
    """Largest possible a_1 / a_0 in degree n: 2 cos(pi / (n + 2))."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"fejer_bound needs n >= 1, got {n!r}")
    return 2.0 * math.cos(math.pi / (n + 2))
