"""Extremal problems: closed forms, bound lines, KKT solver and the V_n pipeline."""

from .results import CertificateReport, SweepRecord, VnResult
from .lowdegree import (
    v2_objective,
    v3_objective,
    c3_membership,
    delta_ratio_lower,
    cubic_family_v,
    scan_objective,
    compute_v2,
    compute_v3,
)
from .bounds import (
    BoundLine,
    LowerBoundFunctional,
    DEFAULT_LINES,
    bound_line_eval,
    bound_line_stationary,
    lower_envelope,
    restrict_interval,
    functional_s,
    verify_functional,
)
from .kkt_solver import (
    ReducedProblem,
    ActiveSet,
    PenaltySchedule,
    SolveOutcome,
    penalty_objective,
    solve_subproblem,
    chi_reduced,
    certify_full,
    kkt_residual,
    slater_slack,
)
from .pipeline import sweep, sweep_subproblems, refine, compute_vn
from .witnesses import PUBLISHED_CONSTANTS

__all__ = [
    "CertificateReport",
    "SweepRecord",
    "VnResult",
    "v2_objective",
    "v3_objective",
    "c3_membership",
    "delta_ratio_lower",
    "cubic_family_v",
    "scan_objective",
    "compute_v2",
    "compute_v3",
    "BoundLine",
    "LowerBoundFunctional",
    "DEFAULT_LINES",
    "bound_line_eval",
    "bound_line_stationary",
    "lower_envelope",
    "restrict_interval",
    "functional_s",
    "verify_functional",
    "ReducedProblem",
    "ActiveSet",
    "PenaltySchedule",
    "SolveOutcome",
    "penalty_objective",
    "solve_subproblem",
    "chi_reduced",
    "certify_full",
    "kkt_residual",
    "slater_slack",
    "sweep",
    "sweep_subproblems",
    "refine",
    "compute_vn",
    "PUBLISHED_CONSTANTS",
]
