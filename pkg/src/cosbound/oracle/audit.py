"""
Independent audit of computed chi values.

At the argmin of V_n and a few seeded random points of the restricted
interval, the reduced optimum is sandwiched between the bound lines and the
two independent oracles.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..common.config import Settings
from ..common.exceptions import AllStartsFailed, Infeasible, NoFeasibleSample
from ..common.logging import get_logger
from ..extremal.bounds import DEFAULT_LINES
from ..extremal.kkt_solver import ReducedProblem, certify_full, chi_reduced, start_vectors
from ..extremal.pipeline import compute_vn, schedule_from
from .lemmas import inequality_properties, spectral_cross_check
from .penalty import one_sided_penalty_chi
from .sampling import brute_force_chi


BRUTE_TOL = 1e-5
ONE_SIDED_TOL = 1e-4
LINE_TOL = 1e-6
SPECTRAL_TOL = 1e-8


@dataclass(frozen=True)
class AuditPoint:
    """Sandwich evidence at one a."""

    a: float
    chi: float
    certified: bool
    brute_force: float
    one_sided: float
    line_bound: float
    checks: dict[str, bool] = field(default_factory=dict)
    slack: float = math.inf

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "chi": self.chi,
            "certified": self.certified,
            "brute_force": self.brute_force,
            "one_sided": self.one_sided,
            "line_bound": self.line_bound,
            "slack": self.slack,
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def audit_point(n: int, a: float, settings: Settings = Settings(), warm=None) -> AuditPoint:
    """Compare chi_reduced at a with both oracles and the bound lines."""
    schedule = schedule_from(settings)
    problem = ReducedProblem.for_degree(n, a)
    try:
        chi, outcome, _ = chi_reduced(problem, schedule, settings.restarts, settings.seed, warm)
        certificate = certify_full(outcome, n)
        certified, slack = certificate.passed, certificate.slack
    except Infeasible:
        chi, certified, slack = math.nan, False, math.inf

    try:
        brute = brute_force_chi(n, a, settings.samples, settings.seed, settings.polish)
    except NoFeasibleSample as e:
        get_logger().warning(str(e))
        brute = math.nan

    full = ReducedProblem(n, a, tuple(range(1, n)))
    starts = start_vectors(full, settings.restarts, settings.seed, 0, warm)
    try:
        one_sided = one_sided_penalty_chi(n, a, schedule, starts)
    except AllStartsFailed as e:
        get_logger().warning(str(e))
        one_sided = math.nan

    line_bound = max(line.A * a - line.B for line in DEFAULT_LINES)
    checks = {
        "chi_above_lines": chi >= line_bound - LINE_TOL,
        "chi_below_brute_force": not math.isfinite(brute) or chi <= brute + BRUTE_TOL,
        "chi_below_one_sided": not math.isfinite(one_sided) or chi <= one_sided + ONE_SIDED_TOL,
        "brute_force_above_lines": not math.isfinite(brute) or brute >= line_bound - LINE_TOL,
        "one_sided_above_lines": not math.isfinite(one_sided) or one_sided >= line_bound - LINE_TOL,
    }
    if certified and math.isfinite(one_sided):
        checks["one_sided_agrees"] = abs(chi - one_sided) <= ONE_SIDED_TOL
    return AuditPoint(a, chi, certified, brute, one_sided, line_bound, checks, slack)


def audit(n: int, settings: Settings = Settings()) -> dict:
    """
    Audit V_n at its argmin and ``settings.audit_points`` random points.

    Returns:
        Report dictionary with a top-level ``passed`` verdict
    """
    logger = get_logger()
    result = compute_vn(n, settings)
    report = {"n": n, "v": result.v_value, "a_star": result.a_star}
    if n <= 3:
        report["points"] = []
    else:
        rng = np.random.default_rng(np.random.SeedSequence([int(settings.seed), int(n), 7]))
        lo, hi = result.interval
        a_values = [result.a_star] + sorted(float(a) for a in rng.uniform(lo, hi, settings.audit_points))
        warm = np.asarray(result.witness_factor.entries)
        points = []
        for a in a_values:
            logger.info(f"auditing n={n} at a = {a:.9f}")
            points.append(audit_point(n, a, settings, warm))
        report["points"] = [p.to_dict() for p in points]

    properties = inequality_properties(10_000, settings.seed)
    spectral = spectral_cross_check(n, 100, settings.seed)
    report["properties"] = properties.to_dict()
    report["spectral_max_deviation"] = spectral
    report["passed"] = (
        all(p["passed"] for p in report["points"])
        and properties.passed
        and spectral <= SPECTRAL_TOL
    )
    return report
