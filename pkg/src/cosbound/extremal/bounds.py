"""
Lower-bound lines for chi_n(a) and restriction of the a-interval.

Each positive functional S(f) = f(phi_0) + int m(phi) f(phi) dphi with
s(k) = S(cos k phi) <= 1 for k >= 2 gives chi_n(a) >= A a - B with
A = 1 - s(1) and B = s(0). Dividing by (sqrt(a) - 1)^2 gives a bound line
F(a) whose super-level set {F > v} cannot contain the minimizer of the
ratio once v is an upper bound for V_n.
"""

import math
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import bisect

from ..common.exceptions import DomainError, NoRestriction
from ..core.trigpoly import fejer_bound
from ..numerics.quadrature import quadrature


ROOT_XTOL = 1e-12
EDGE = 1e-12
S_TOL = 1e-5
LINE_TOL = 1e-5
WEIGHT_GRID = 2001


@dataclass(frozen=True)
class BoundLine:
    """chi_n(a) >= A a - B, as the ratio bound F(a) = (A a - B) / (sqrt(a) - 1)^2."""

    A: float
    B: float
    name: str = ""

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError(f"bound line slope must be positive, got {self.A}")

    def to_dict(self) -> dict:
        return {"name": self.name, "A": self.A, "B": self.B, "stationary": bound_line_stationary(self)}


@dataclass(frozen=True)
class LowerBoundFunctional:
    """S(f) = f(eval_point) + integral of weight * f over support."""

    eval_point: float
    weight: Callable[[float], float]
    support: tuple[float, float]
    name: str = ""


@dataclass(frozen=True)
class FunctionalReport:
    """Numerical verification of a LowerBoundFunctional."""

    name: str
    weight_nonnegative: bool
    min_weight: float
    s_values: dict[int, float]
    max_s: float
    line: BoundLine
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "weight_nonnegative": self.weight_nonnegative,
            "min_weight": self.min_weight,
            "s": {str(k): v for k, v in sorted(self.s_values.items())},
            "max_s": self.max_s,
            "line": {"A": self.line.A, "B": self.line.B},
        }


@dataclass(frozen=True)
class Restriction:
    """Restricted a-interval with the lines that produced it."""

    n: int
    v_upper: float
    a_lo: float
    a_hi: float
    excluded: tuple[tuple[str, float, float], ...] = field(default_factory=tuple)


def _zero_weight(phi: float) -> float:
    return 0.0


def _weight_one(phi: float) -> float:
    return 3.7386644 - 1.4700922 * math.cos(4.0 * phi) - 2.2685722 * math.cos(8.0 * phi)


def _weight_two(phi: float) -> float:
    return 2.0 * math.sqrt(3.0) + 8.0 * (phi - math.pi / 3.0)


TRIVIAL_FUNCTIONAL = LowerBoundFunctional(math.pi, _zero_weight, (math.pi / 2.0, math.pi), "trivial")
FUNCTIONAL_ONE = LowerBoundFunctional(math.pi, _weight_one, (math.pi / 2.0, math.pi), "cosine-weight")
FUNCTIONAL_TWO = LowerBoundFunctional(
    2.0 * math.pi / 3.0, _weight_two, (math.pi / 3.0, math.pi), "linear-weight"
)
FUNCTIONALS = (TRIVIAL_FUNCTIONAL, FUNCTIONAL_ONE, FUNCTIONAL_TWO)

# Published 7-decimal lines; verify_functionals checks them against quadrature.
LINE_ONE = BoundLine(2.0, 1.0, "F1")
LINE_TWO = BoundLine(5.8726781, 6.8726781, "F2")
LINE_THREE = BoundLine(16.5, 25.8011608, "F3")
DEFAULT_LINES = (LINE_ONE, LINE_TWO, LINE_THREE)
LINE_SOURCES = {"F1": TRIVIAL_FUNCTIONAL, "F2": FUNCTIONAL_ONE, "F3": FUNCTIONAL_TWO}


def bound_line_eval(line: BoundLine, a: float) -> float:
    """F(a) = (A a - B) / (sqrt(a) - 1)^2 for a > 1."""
    if not a > 1.0:
        raise DomainError(f"bound line needs a > 1, got {a}")
    return (line.A * a - line.B) / (math.sqrt(a) - 1.0) ** 2


def bound_line_stationary(line: BoundLine) -> Optional[float]:
    """Interior maximum (B/A)^2 of F when B > A, else None (F decreasing)."""
    if line.B > line.A:
        return (line.B / line.A) ** 2
    return None


def lower_envelope(a: float, lines: Sequence[BoundLine] = DEFAULT_LINES) -> float:
    """Largest bound-line value at a."""
    return max(bound_line_eval(line, a) for line in lines)


def _excluded_pieces(line: BoundLine, v: float, lo: float, hi: float) -> list[tuple[float, float]]:
    """Subintervals of [lo, hi] where F > v, F being monotone between breakpoints."""
    breaks = [lo]
    peak = bound_line_stationary(line)
    if peak is not None and lo < peak < hi:
        breaks.append(peak)
    breaks.append(hi)

    def g(t: float) -> float:
        return bound_line_eval(line, t) - v

    pieces = []
    for left, right in zip(breaks[:-1], breaks[1:]):
        gl, gr = g(left), g(right)
        if gl > 0 and gr > 0:
            pieces.append((left, right))
        elif gl > 0 >= gr:
            pieces.append((left, bisect(g, left, right, xtol=ROOT_XTOL)))
        elif gr > 0 >= gl:
            pieces.append((bisect(g, left, right, xtol=ROOT_XTOL), right))
    return pieces


def _merge(pieces: list[tuple[float, float]]) -> list[tuple[float, float]]:
    merged: list[tuple[float, float]] = []
    for left, right in sorted(pieces):
        if merged and left <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], right))
        else:
            merged.append((left, right))
    return merged


def _round(value: float, rounding: str) -> float:
    return float(Decimal(repr(value)).quantize(Decimal("1e-7"), rounding=rounding))


def restrict_interval_report(
    n: int, v_upper: float, lines: Sequence[BoundLine] = DEFAULT_LINES
) -> Restriction:
    """
    Shrink (1, A(n)] to the set where every bound line stays <= v_upper.

    The lower end is rounded down and the upper end up at the 7th decimal;
    the Fejer endpoint is kept exact when no line cuts it.

    Raises:
        NoRestriction: If no line excludes any part of the interval
        DomainError: For n outside 4..8 or an empty restricted set
    """
    if not 4 <= n <= 8:
        raise DomainError(f"interval restriction supports 4 <= n <= 8, got {n}")
    top = fejer_bound(n)
    lo = 1.0 + EDGE

    excluded = []
    pieces = []
    for line in lines:
        for left, right in _excluded_pieces(line, v_upper, lo, top):
            pieces.append((left, right))
            excluded.append((line.name, left, right))
    if not pieces:
        raise NoRestriction(f"no bound line exceeds {v_upper} for n = {n}", (lo, top))

    # complement of the excluded union inside (lo, top)
    gaps = []
    cursor = lo
    for left, right in _merge(pieces):
        if left > cursor:
            gaps.append((cursor, left))
        cursor = max(cursor, right)
    if cursor < top:
        gaps.append((cursor, top))
    if not gaps:
        raise DomainError(f"every a in (1, {top}] is excluded; {v_upper} is not an upper bound")

    a_lo = gaps[0][0]
    a_hi = gaps[-1][1]
    if a_lo > lo:
        a_lo = _round(a_lo, ROUND_FLOOR)
    if a_hi < top:
        a_hi = min(_round(a_hi, ROUND_CEILING), top)
    return Restriction(n, v_upper, a_lo, a_hi, tuple(excluded))


def restrict_interval(
    n: int, v_upper: float, lines: Sequence[BoundLine] = DEFAULT_LINES
) -> tuple[float, float]:
    """Restricted (a_lo, a_hi) for the ratio minimizer; see restrict_interval_report."""
    report = restrict_interval_report(n, v_upper, lines)
    return report.a_lo, report.a_hi


def functional_s(fn: LowerBoundFunctional, k: int) -> float:
    """s(k) = cos(k phi_0) + integral of m(phi) cos(k phi) over the support."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    lo, hi = fn.support
    integral = quadrature(lambda phi: fn.weight(phi) * math.cos(k * phi), lo, hi, tol=1e-12)
    return math.cos(k * fn.eval_point) + integral


def verify_functional(fn: LowerBoundFunctional, n: int) -> FunctionalReport:
    """
    Check a functional numerically.

    The weight must be nonnegative on its support and s(k) <= 1 + 1e-5 for
    2 <= k <= n; the implied line is (1 - s(1), s(0)).
    """
    if not 2 <= n <= 8:
        raise DomainError(f"functional verification supports 2 <= n <= 8, got {n}")
    lo, hi = fn.support
    weights = np.array([fn.weight(float(t)) for t in np.linspace(lo, hi, WEIGHT_GRID)])
    min_weight = float(np.min(weights))
    s_values = {k: functional_s(fn, k) for k in range(0, n + 1)}
    max_s = max(s_values[k] for k in range(2, n + 1))
    weight_ok = min_weight >= -1e-12
    return FunctionalReport(
        name=fn.name,
        weight_nonnegative=weight_ok,
        min_weight=min_weight,
        s_values=s_values,
        max_s=max_s,
        line=BoundLine(1.0 - s_values[1], s_values[0], fn.name),
        passed=weight_ok and max_s <= 1.0 + S_TOL,
    )


def verify_functionals(n: int = 8) -> list[FunctionalReport]:
    """
    Verify every built-in functional and its published line.

    Raises:
        DomainError: If a functional fails or disagrees with its line
    """
    reports = []
    for line in DEFAULT_LINES:
        report = verify_functional(LINE_SOURCES[line.name], n)
        if not report.passed:
            raise DomainError(f"functional {report.name} fails verification (max s = {report.max_s})")
        if abs(report.line.A - line.A) > LINE_TOL or abs(report.line.B - line.B) > LINE_TOL:
            raise DomainError(
                f"functional {report.name} gives ({report.line.A}, {report.line.B}), "
                f"expected ({line.A}, {line.B})"
            )
        reports.append(report)
    return reports
