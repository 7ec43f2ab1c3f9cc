"""
V_n computation pipeline.

Degrees 2 and 3 use the closed-form searches. From degree 4 on, the
bound-line functionals are verified, the a-interval is restricted with the
previous constant as upper bound, chi_n(a) / (sqrt(a) - 1)^2 is swept over a
uniform grid, the best certified grid point is refined by golden-section
search, and the final witness is certified against the full problem.
"""

import math
import time
from dataclasses import replace
from multiprocessing import Pool
from typing import Optional, Sequence

import numpy as np

from ..common.config import Settings
from ..common.exceptions import (
    AllStartsFailed,
    CertificationFailed,
    DomainError,
    Infeasible,
    NoRestriction,
)
from ..common.logging import get_logger
from ..core.trigpoly import SpectralFactor, fejer_bound, from_spectral_factor, v_functional
from ..numerics.golden import golden_section_min
from ..numerics.newton import NewtonConfig
from .bounds import DEFAULT_LINES, restrict_interval, verify_functionals
from .kkt_solver import (
    PenaltySchedule,
    ReducedProblem,
    SolveOutcome,
    certify_full,
    chi_reduced,
    solve_subproblem,
    start_vectors,
)
from .lowdegree import compute_v2, compute_v3
from .results import SweepRecord, VnResult
from .witnesses import PUBLISHED_CONSTANTS


SOUNDNESS_TOL = 1e-6
WITNESS_TOL = 1e-6

_RESULTS: dict[tuple[int, Settings], VnResult] = {}
_FUNCTIONALS_VERIFIED = False


def schedule_from(settings: Settings) -> PenaltySchedule:
    """Penalty schedule and Newton settings for a run."""
    newton = NewtonConfig(
        grad_tol=settings.grad_tol, max_iters=settings.max_iters, step_tol=settings.step_tol
    )
    return PenaltySchedule.from_exponents(settings.mu_first_exponent, settings.mu_last_exponent, newton)


def _ratio(chi: float, a: float) -> float:
    return chi / (math.sqrt(a) - 1.0) ** 2


def _solve_point(
    n: int,
    a: float,
    schedule: PenaltySchedule,
    restarts: int,
    seed: int,
    warm: Optional[np.ndarray] = None,
) -> SweepRecord:
    problem = ReducedProblem.for_degree(n, float(a))
    try:
        chi, outcome, sid = chi_reduced(problem, schedule, restarts, seed, warm)
    except Infeasible:
        get_logger().warning(f"n={n}: no feasible subproblem at a = {a:.9f}")
        return SweepRecord(float(a), math.inf, math.inf, -1, False, None)
    certified = certify_full(outcome, n).passed
    return SweepRecord(
        float(a), chi, _ratio(chi, a), sid, certified, outcome, outcome.multipliers_valid
    )


def _solve_point_star(args) -> SweepRecord:
    return _solve_point(*args)


def sweep(
    n: int,
    interval: tuple[float, float],
    grid_points: int,
    settings: Settings = Settings(),
) -> list[SweepRecord]:
    """
    Evaluate chi_n(a) on a uniform a-grid.

    Sequential sweeps warm-start each point from its left neighbour; with
    ``settings.jobs > 1`` points are solved in a process pool without warm
    starts. Records come back in increasing a either way.
    """
    if grid_points < 2:
        raise DomainError("a sweep needs at least 2 grid points")
    lo, hi = interval
    if not 1.0 < lo < hi <= fejer_bound(n) + 1e-12:
        raise DomainError(f"interval ({lo}, {hi}) not inside (1, {fejer_bound(n)}]")
    logger = get_logger()
    schedule = schedule_from(settings)
    grid = np.linspace(lo, hi, grid_points)

    if settings.jobs > 1:
        logger.info(f"n={n}: sweeping {grid_points} points on {settings.jobs} workers")
        tasks = [(n, float(a), schedule, settings.restarts, settings.seed, None) for a in grid]
        with Pool(processes=settings.jobs) as pool:
            records = pool.map(_solve_point_star, tasks)
    else:
        logger.info(f"n={n}: sweeping {grid_points} points on [{lo:.7f}, {hi:.7f}]")
        records = []
        warm = None
        for i, a in enumerate(grid):
            record = _solve_point(n, float(a), schedule, settings.restarts, settings.seed, warm)
            if record.outcome is not None:
                warm = record.outcome.x
            records.append(record)
            if (i + 1) % 100 == 0:
                logger.debug(f"n={n}: {i + 1}/{grid_points} points")

    for a, line, value in bound_violations(records):
        logger.warning(f"n={n}: chi at a = {a:.9f} is below line {line} ({value:.3e})")
    return records


def bound_violations(records: Sequence[SweepRecord], lines=DEFAULT_LINES) -> list[tuple[float, str, float]]:
    """(a, line, chi - (A a - B)) for every record that dips below a bound line."""
    violations = []
    for record in records:
        if not math.isfinite(record.chi):
            continue
        for line in lines:
            gap = record.chi - (line.A * record.a - line.B)
            if gap < -SOUNDNESS_TOL:
                violations.append((record.a, line.name, gap))
    return violations


def sweep_subproblems(
    n: int,
    interval: tuple[float, float],
    grid_points: int,
    settings: Settings = Settings(),
) -> dict[str, list[dict]]:
    """
    Per-active-set sweep rows keyed by active-set label.

    Each active set is warm-started from its own optimum at the previous
    grid point; rows record whether the optimum is feasible for the kept
    inequalities.
    """
    if grid_points < 2:
        raise DomainError("a sweep needs at least 2 grid points")
    schedule = schedule_from(settings)
    tables: dict[str, list[dict]] = {}
    warm: dict[int, np.ndarray] = {}
    for a in np.linspace(interval[0], interval[1], grid_points):
        problem = ReducedProblem.for_degree(n, float(a))
        for active in problem.active_sets():
            sid = active.subproblem_id(problem)
            starts = start_vectors(problem, settings.restarts, settings.seed, sid, warm.get(sid))
            try:
                outcome = solve_subproblem(problem, active, schedule, starts)
            except AllStartsFailed:
                outcome = None
            if outcome is not None:
                warm[sid] = outcome.x
            tables.setdefault(active.label(), []).append(
                {
                    "a": float(a),
                    "chi": outcome.objective_F if outcome is not None else math.inf,
                    "ratio": outcome.ratio if outcome is not None else math.inf,
                    "subproblem": sid,
                    "converged": outcome is not None and outcome.converged,
                    "feasible": outcome is not None and outcome.feasible,
                    "multipliers_valid": outcome is not None and outcome.multipliers_valid,
                }
            )
    return tables


def refine(
    n: int,
    records: Sequence[SweepRecord],
    bracket_halfwidth: Optional[float] = None,
    settings: Settings = Settings(),
) -> tuple[float, float, SolveOutcome]:
    """
    Golden-section refinement of the ratio around the best certified record.

    The bracket is [a_best - h, a_best + h] clipped to the swept range; h
    defaults to two grid spacings.

    Returns:
        Tuple of (a_star, ratio_star, outcome at a_star)

    Raises:
        CertificationFailed: If no record is certified
    """
    certified = [r for r in records if r.certified and math.isfinite(r.ratio)]
    if not certified:
        raise CertificationFailed(f"n={n}: no certified sweep record to refine")
    best = min(certified, key=lambda r: (r.ratio, r.a))
    a_values = [r.a for r in records]
    lo_edge, hi_edge = min(a_values), max(a_values)
    if bracket_halfwidth is None:
        spacing = (hi_edge - lo_edge) / max(len(records) - 1, 1)
        bracket_halfwidth = 2.0 * spacing
    lo = max(lo_edge, best.a - bracket_halfwidth)
    hi = min(hi_edge, best.a + bracket_halfwidth)

    schedule = schedule_from(settings)
    cache: dict[float, tuple[float, Optional[SolveOutcome]]] = {}
    warm = best.outcome.x

    def objective(a: float) -> float:
        if a in cache:
            return cache[a][0]
        try:
            chi, outcome, _ = chi_reduced(
                ReducedProblem.for_degree(n, a), schedule, settings.restarts, settings.seed, warm
            )
        except Infeasible:
            cache[a] = (math.inf, None)
            return math.inf
        value = _ratio(chi, a) if certify_full(outcome, n).passed else math.inf
        cache[a] = (value, outcome)
        return value

    if hi - lo <= settings.refine_tol:
        return best.a, best.ratio, best.outcome
    result = golden_section_min(objective, lo, hi, settings.refine_tol)
    ratio_star, outcome = cache.get(result.x_star, (math.inf, None))
    if outcome is None or ratio_star > best.ratio:
        get_logger().debug(f"n={n}: refinement did not improve on grid point {best.a:.9f}")
        return best.a, best.ratio, best.outcome
    return result.x_star, ratio_star, outcome


def verify_bound_functionals() -> None:
    """Check the built-in functionals once per process."""
    global _FUNCTIONALS_VERIFIED
    if not _FUNCTIONALS_VERIFIED:
        for report in verify_functionals(8):
            get_logger().debug(
                f"functional {report.name}: line ({report.line.A:.7f}, {report.line.B:.7f}), "
                f"max s = {report.max_s:.7f}"
            )
        _FUNCTIONALS_VERIFIED = True


def upper_bound_for(n: int, settings: Settings) -> float:
    """V_{n-1}, computed or (strict mode) published."""
    if settings.strict_paper_bounds:
        return PUBLISHED_CONSTANTS[n - 1]
    return compute_vn(n - 1, settings).v_value


def compute_vn(n: int, settings: Settings = Settings()) -> VnResult:
    """
    Compute V_n for 2 <= n <= 8.

    Results are memoized per (n, settings) so the chain of upper bounds is
    computed once per process.

    Raises:
        CertificationFailed: If the final witness fails certification
    """
    if not 2 <= n <= 8:
        raise DomainError(f"V_n is supported for 2 <= n <= 8, got {n}")
    key = (n, settings)
    if key in _RESULTS:
        return _RESULTS[key]

    logger = get_logger()
    started = time.perf_counter()
    if n == 2:
        result = compute_v2()
    elif n == 3:
        result = compute_v3()
    else:
        result = _compute_from_sweep(n, settings, started)

    if n <= 3:
        if not result.certified:
            raise CertificationFailed(f"V_{n} witness fails membership: {result.certificate.failures}")
        result = replace(result, seed=settings.seed)
    _RESULTS[key] = result
    logger.success(f"V_{n} = {result.v_value:.7f} at a* = {result.a_star:.7f}")
    return result


def _compute_from_sweep(n: int, settings: Settings, started: float) -> VnResult:
    logger = get_logger()
    verify_bound_functionals()
    v_upper = upper_bound_for(n, settings)
    try:
        interval = restrict_interval(n, v_upper)
    except NoRestriction as e:
        logger.warning(str(e))
        interval = e.interval
    logger.info(f"n={n}: a restricted to [{interval[0]:.7f}, {interval[1]:.7f}] by V_{n - 1} = {v_upper:.7f}")

    records = sweep(n, interval, settings.grid, settings)
    notes = []
    if settings.jobs > 1:
        notes.append("parallel sweep: warm starts disabled")
    finite = [r for r in records if math.isfinite(r.ratio)]
    if finite:
        lowest = min(finite, key=lambda r: (r.ratio, r.a))
        if not lowest.certified:
            notes.append(
                f"uncertified grid minimum {lowest.ratio!r} at a = {lowest.a!r} (lower bound only)"
            )
            logger.warning(notes[-1])

    flagged = sum(1 for r in records if r.certified and not r.multipliers_valid)
    if flagged:
        notes.append(f"{flagged} certified grid points have negative multipliers")
        logger.warning(notes[-1])

    a_star, ratio_star, outcome = refine(n, records, settings.refine_halfwidth, settings)
    certificate = certify_full(outcome, n)
    if not certificate.passed:
        raise CertificationFailed(f"V_{n} witness fails certification: {certificate.failures}")
    if not outcome.multipliers_valid:
        notes.append(f"witness multipliers {outcome.multipliers.u} are negative")
        logger.warning(notes[-1])
    logger.debug(f"n={n}: inactive inequality slack {certificate.slack:.3e}")
    witness = from_spectral_factor(outcome.x)
    check = v_functional(witness)
    if abs(check - ratio_star) > WITNESS_TOL:
        raise CertificationFailed(
            f"V_{n}: v(witness) = {check:.9f} disagrees with ratio {ratio_star:.9f}"
        )
    return VnResult(
        n=n,
        interval=(float(interval[0]), float(interval[1])),
        v_value=ratio_star,
        a_star=a_star,
        witness=witness,
        certificate=certificate,
        witness_factor=SpectralFactor(tuple(outcome.x)),
        grid_points=settings.grid,
        seed=settings.seed,
        runtime=time.perf_counter() - started,
        notes=tuple(notes),
    )


def clear_cache() -> None:
    """Forget memoized results."""
    _RESULTS.clear()
