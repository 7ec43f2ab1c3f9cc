"""
Reduced constrained problems and their KKT active-set subproblems.

A spectral factor x of length n + 1 is optimized for

    minimize    F(x)  = (sum x_k)^2 - 1
    subject to  H1(x) = sum x_k^2 = 1
                H2(x) = 2 sum x_k x_{k+1} = a
                G_j(x) = 2 sum x_k x_{k+j+1} >= 0   for kept j

Every function is a quadratic form x^T M x, so penalty objectives and
their derivatives are quartic polynomials with closed-form gradients and
Hessians. Each subset of the kept inequalities is solved as its own
equality-constrained subproblem (complementary slackness), and the best
feasible outcome gives the reduced optimum chi at a.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from ..common.exceptions import AllStartsFailed, DomainError, Infeasible, NotConverged
from ..common.logging import get_logger
from ..core.trigpoly import fejer_bound, from_spectral_factor, membership_c_n
from ..numerics.newton import NewtonConfig, newton_minimize
from .results import CertificateReport
from .witnesses import published_starts


KEPT_CONSTRAINTS = {4: (), 5: (4,), 6: (4, 5), 7: (4, 5), 8: (4, 5)}

EQ_TOL = 1e-7
INEQ_TOL = 1e-6
GATE_TOL = 1e-7
MULTIPLIER_TOL = 1e-5
KKT_TOL = 1e-5
THETA_TOL = 1e-9
PENALTY_TERM_TOL = 1e-6
POLISH_ITERS = 20
POLISH_RADIUS = 1e-4
TIE_TOL = 1e-9
LEX_TOL = 1e-9
FEJER_EDGE = 1e-12


@lru_cache(maxsize=None)
def shift_matrix(size: int, j: int) -> np.ndarray:
    """Symmetric matrix T_j with x^T T_j x = 2 sum x_k x_{k+j} (T_0 = I)."""
    if j == 0:
        m = np.eye(size)
    else:
        m = np.eye(size, k=j) + np.eye(size, k=-j)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def ones_matrix(size: int) -> np.ndarray:
    m = np.ones((size, size))
    m.setflags(write=False)
    return m


def quadratic_form(m: np.ndarray, x: np.ndarray) -> float:
    return float(x @ m @ x)


def objective_f(x: np.ndarray) -> float:
    """F(x) = (sum x_k)^2 - 1."""
    s = float(np.sum(x))
    return s * s - 1.0


def inequality_values(x: np.ndarray) -> dict[int, float]:
    """G_j(x) for every j = 1..n-1."""
    size = x.size
    return {j: quadratic_form(shift_matrix(size, j + 1), x) for j in range(1, size - 1)}


@dataclass(frozen=True)
class ReducedProblem:
    """One instance (n, a) with its kept inequality constraints."""

    n: int
    a: float
    kept: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"reduced problem needs n >= 2, got {self.n}")
        if not 1.0 < self.a <= fejer_bound(self.n) + FEJER_EDGE:
            raise DomainError(f"a = {self.a} outside (1, {fejer_bound(self.n)}]")
        kept = tuple(sorted(set(self.kept)))
        if any(not 1 <= j <= self.n - 1 for j in kept):
            raise DomainError(f"kept constraints {kept} outside 1..{self.n - 1}")
        object.__setattr__(self, "kept", kept)

    @classmethod
    def for_degree(cls, n: int, a: float) -> "ReducedProblem":
        """Problem with the standard kept set for degree n."""
        if n not in KEPT_CONSTRAINTS:
            raise DomainError(f"no reduced problem for n = {n}")
        return cls(n, a, KEPT_CONSTRAINTS[n])

    @property
    def size(self) -> int:
        return self.n + 1

    def active_sets(self) -> list["ActiveSet"]:
        """All subsets of kept, ordered by bitmask over kept."""
        sets = []
        for mask in range(2 ** len(self.kept)):
            sets.append(ActiveSet(tuple(j for i, j in enumerate(self.kept) if mask >> i & 1)))
        return sets


@dataclass(frozen=True)
class ActiveSet:
    """Kept constraints forced to equality."""

    active: tuple[int, ...] = ()

    def subproblem_id(self, problem: ReducedProblem) -> int:
        return sum(1 << problem.kept.index(j) for j in self.active)

    def label(self) -> str:
        return "{" + ",".join(str(j) for j in self.active) + "}"


@dataclass(frozen=True)
class PenaltySchedule:
    """Ascending penalty weights with the Newton settings used at each one."""

    mu_values: tuple[float, ...] = tuple(10.0**e for e in range(2, 10))
    newton: NewtonConfig = field(default_factory=NewtonConfig)

    def __post_init__(self):
        mus = tuple(float(m) for m in self.mu_values)
        if not mus or any(m <= 0 for m in mus):
            raise DomainError("penalty weights must be positive")
        if any(b <= a for a, b in zip(mus, mus[1:])):
            raise DomainError("penalty weights must be strictly increasing")
        if mus[-1] < 1e8:
            raise DomainError("final penalty weight must be at least 1e8")
        object.__setattr__(self, "mu_values", mus)

    @classmethod
    def from_exponents(cls, first: int, last: int, newton: Optional[NewtonConfig] = None) -> "PenaltySchedule":
        return cls(tuple(10.0**e for e in range(first, last + 1)), newton or NewtonConfig())

    @property
    def final_mu(self) -> float:
        return self.mu_values[-1]


@dataclass(frozen=True)
class Multipliers:
    """lambda_1, lambda_2 for the equalities and u_j for kept inequalities."""

    lambda1: float
    lambda2: float
    u: dict[int, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"lambda1": self.lambda1, "lambda2": self.lambda2, "u": {str(j): v for j, v in self.u.items()}}


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one subproblem solve, reported in canonical form."""

    problem: ReducedProblem
    active: ActiveSet
    x: np.ndarray
    objective_F: float
    residual_h1: float
    residual_h2: float
    inequality_values: dict[int, float]
    multipliers: Multipliers
    kkt_residual_norm: float
    converged: bool
    canonical: bool = True
    mu: Optional[float] = None
    theta: tuple[float, ...] = ()
    penalty_term: float = 0.0

    @property
    def feasible(self) -> bool:
        """Converged and every kept inequality holds."""
        return self.converged and all(
            self.inequality_values[j] >= -INEQ_TOL for j in self.problem.kept
        )

    @property
    def multipliers_valid(self) -> bool:
        return all(u >= -MULTIPLIER_TOL for u in self.multipliers.u.values())

    @property
    def ratio(self) -> float:
        return self.objective_F / (math.sqrt(self.problem.a) - 1.0) ** 2


def _constraint_terms(problem: ReducedProblem, active: ActiveSet) -> list[tuple[np.ndarray, float]]:
    """(matrix, target) pairs of every equality in the subproblem."""
    size = problem.size
    terms = [(shift_matrix(size, 0), 1.0), (shift_matrix(size, 1), problem.a)]
    terms.extend((shift_matrix(size, j + 1), 0.0) for j in active.active)
    return terms


def penalty_objective(
    problem: ReducedProblem, active: ActiveSet, mu: float, x: np.ndarray
) -> tuple[float, np.ndarray, np.ndarray]:
    """
    F(x) + mu [(H1 - 1)^2 + (H2 - a)^2 + sum over active j of G_j^2].

    Returns:
        Tuple of (value, gradient, Hessian), all exact
    """
    if mu < 0:
        raise DomainError("mu must be nonnegative")
    x = np.asarray(x, dtype=float)
    if x.size != problem.size:
        raise DomainError(f"x has length {x.size}, expected {problem.size}")
    s = float(np.sum(x))
    value = s * s - 1.0
    grad = np.full(x.size, 2.0 * s)
    hess = 2.0 * ones_matrix(x.size)
    for m, target in _constraint_terms(problem, active):
        mx = m @ x
        r = float(x @ mx) - target
        g = 2.0 * mx
        value += mu * r * r
        grad = grad + (2.0 * mu * r) * g
        hess = hess + mu * (2.0 * np.outer(g, g) + 4.0 * r * m)
    return value, grad, hess


def penalty_alpha(problem: ReducedProblem, active: ActiveSet, x: np.ndarray) -> float:
    """Squared equality violation alpha(x) of a subproblem."""
    x = np.asarray(x, dtype=float)
    return sum((quadratic_form(m, x) - target) ** 2 for m, target in _constraint_terms(problem, active))


def theta_monotone(theta: Sequence[float], tol: float = THETA_TOL) -> bool:
    """True when theta(mu) never decreases along the schedule (up to tol relative)."""
    return all(b >= a - tol * (1.0 + abs(a)) for a, b in zip(theta, theta[1:]))


def canonical_form(x: np.ndarray) -> np.ndarray:
    """Sign with sum x > 0, then the lexicographically larger of x and its reversal."""
    x = np.asarray(x, dtype=float)
    if np.sum(x) < 0:
        x = -x
    rev = x[::-1]
    for xi, ri in zip(x, rev):
        if abs(xi - ri) > LEX_TOL:
            return x.copy() if xi > ri else rev.copy()
    return x.copy()


def symmetry_images(x: np.ndarray) -> list[np.ndarray]:
    """The four images of x under negation and index reversal."""
    x = np.asarray(x, dtype=float)
    return [x, -x, x[::-1].copy(), -x[::-1]]


def _lex_key(x: np.ndarray) -> tuple[float, ...]:
    return tuple(np.round(x / LEX_TOL) * LEX_TOL)


def least_squares_multipliers(problem: ReducedProblem, active: ActiveSet, x: np.ndarray) -> Multipliers:
    """Multipliers minimizing |grad F + l1 grad H1 + l2 grad H2 - sum u_j grad G_j|."""
    x = np.asarray(x, dtype=float)
    size = problem.size
    columns = [2.0 * shift_matrix(size, 0) @ x, 2.0 * shift_matrix(size, 1) @ x]
    columns.extend(-2.0 * shift_matrix(size, j + 1) @ x for j in active.active)
    grad_f = np.full(size, 2.0 * float(np.sum(x)))
    coef, *_ = np.linalg.lstsq(np.column_stack(columns), -grad_f, rcond=None)
    u = {j: float(coef[2 + i]) for i, j in enumerate(active.active)}
    u.update({j: 0.0 for j in problem.kept if j not in u})
    return Multipliers(float(coef[0]), float(coef[1]), dict(sorted(u.items())))


def penalty_multipliers(problem: ReducedProblem, active: ActiveSet, mu: float, x: np.ndarray) -> Multipliers:
    """Multipliers read off a penalty minimizer: 2 mu times the residual, u_j = -2 mu G_j."""
    size = problem.size
    lambda1 = 2.0 * mu * (quadratic_form(shift_matrix(size, 0), x) - 1.0)
    lambda2 = 2.0 * mu * (quadratic_form(shift_matrix(size, 1), x) - problem.a)
    u = {j: 0.0 for j in problem.kept}
    for j in active.active:
        u[j] = -2.0 * mu * quadratic_form(shift_matrix(size, j + 1), x)
    return Multipliers(lambda1, lambda2, dict(sorted(u.items())))


def _kkt_system(problem: ReducedProblem, active: ActiveSet, x: np.ndarray, nu: np.ndarray):
    """Residual and Jacobian of grad F + sum nu_i grad c_i = 0, c_i(x) = target_i."""
    size = problem.size
    terms = _constraint_terms(problem, active)
    m = len(terms)
    grad = np.full(size, 2.0 * float(np.sum(x)))
    cons = np.empty(m)
    kkt = np.zeros((size + m, size + m))
    w = 2.0 * ones_matrix(size)
    for i, (mat, target) in enumerate(terms):
        col = 2.0 * (mat @ x)
        grad = grad + nu[i] * col
        cons[i] = float(x @ mat @ x) - target
        w = w + 2.0 * nu[i] * mat
        kkt[:size, size + i] = col
        kkt[size + i, :size] = col
    kkt[:size, :size] = w
    return np.concatenate([grad, cons]), kkt


def kkt_polish(
    problem: ReducedProblem,
    active: ActiveSet,
    x: np.ndarray,
    multipliers: Multipliers,
    max_iters: int = POLISH_ITERS,
) -> Optional[tuple[np.ndarray, Multipliers]]:
    """
    Newton iteration on the KKT system of one subproblem.

    Starts from a penalty minimizer and its read-off multipliers. Unknowns
    are x and the signed multipliers (l1, l2, -u_j); each step solves the
    block system [[W, C], [C^T, 0]] with W the Lagrangian Hessian and C the
    constraint gradients. Returns the iterate with the smallest residual,
    or None when no step improves on the start or x drifts by more than
    1e-4.
    """
    size = problem.size
    x0 = np.asarray(x, dtype=float)
    nu = np.array(
        [multipliers.lambda1, multipliers.lambda2] + [-multipliers.u[j] for j in active.active],
        dtype=float,
    )
    residual, jac = _kkt_system(problem, active, x0, nu)
    start_norm = best_norm = float(np.linalg.norm(residual))
    best = None
    z = np.concatenate([x0, nu])
    for _ in range(max_iters):
        step, *_ = np.linalg.lstsq(jac, -residual, rcond=None)
        z = z + step
        residual, jac = _kkt_system(problem, active, z[:size], z[size:])
        norm = float(np.linalg.norm(residual))
        if not np.isfinite(norm) or norm >= best_norm:
            break
        best_norm, best = norm, z.copy()

    if best is None or best_norm >= start_norm:
        return None
    x_new = best[:size]
    if float(np.linalg.norm(x_new - x0)) > POLISH_RADIUS:
        return None
    u = {j: 0.0 for j in problem.kept}
    for i, j in enumerate(active.active):
        u[j] = -float(best[size + 2 + i])
    return x_new, Multipliers(float(best[size]), float(best[size + 1]), dict(sorted(u.items())))


def _stationarity(problem: ReducedProblem, x: np.ndarray, mult: Multipliers) -> float:
    size = problem.size
    vec = np.full(size, 2.0 * float(np.sum(x)))
    vec = vec + mult.lambda1 * 2.0 * (shift_matrix(size, 0) @ x)
    vec = vec + mult.lambda2 * 2.0 * (shift_matrix(size, 1) @ x)
    for j, u in mult.u.items():
        vec = vec - u * 2.0 * (shift_matrix(size, j + 1) @ x)
    return float(np.linalg.norm(vec))


def build_outcome(
    problem: ReducedProblem,
    active: ActiveSet,
    x: np.ndarray,
    multipliers: Optional[Multipliers] = None,
    converged: bool = True,
    mu: Optional[float] = None,
    theta: Sequence[float] = (),
    penalty_term: Optional[float] = None,
    require_stationary: bool = True,
) -> SolveOutcome:
    """
    Assemble a SolveOutcome at a point.

    Multipliers default to the least-squares estimate. A converged verdict
    needs equality residuals and active inequalities within 1e-7 and, unless
    require_stationary is off, a KKT residual of at most 1e-5 (1 + |F|).
    """
    x = np.asarray(x, dtype=float)
    size = problem.size
    res_h1 = quadratic_form(shift_matrix(size, 0), x) - 1.0
    res_h2 = quadratic_form(shift_matrix(size, 1), x) - problem.a
    ineq = inequality_values(x)
    if multipliers is None:
        multipliers = least_squares_multipliers(problem, active, x)
    objective = objective_f(x)
    if penalty_term is None:
        penalty_term = mu * penalty_alpha(problem, active, x) if mu is not None else 0.0
    residual_norm = _stationarity(problem, x, multipliers)
    ok = (
        converged
        and abs(res_h1) <= EQ_TOL
        and abs(res_h2) <= EQ_TOL
        and all(abs(ineq[j]) <= EQ_TOL for j in active.active)
        and (not require_stationary or residual_norm <= KKT_TOL * (1.0 + abs(objective)))
    )
    return SolveOutcome(
        problem=problem,
        active=active,
        x=x,
        objective_F=objective,
        residual_h1=res_h1,
        residual_h2=res_h2,
        inequality_values=ineq,
        multipliers=multipliers,
        kkt_residual_norm=residual_norm,
        converged=ok,
        mu=mu,
        theta=tuple(theta),
        penalty_term=penalty_term,
    )


def coefficient_gate(x: np.ndarray) -> float:
    """|sum_{k>=1} a_k - (F(x) + 1 - H1(x))|, computed through the coefficient map."""
    coeffs = from_spectral_factor(x).as_array()
    return abs(float(np.sum(coeffs[1:])) - (objective_f(x) + 1.0 - float(x @ x)))


def _fejer_outcome(problem: ReducedProblem, active: ActiveSet) -> SolveOutcome:
    """
    At a = A(n) the only feasible factors are the top eigenvectors of T_1.

    The gradients of H1 and H2 are parallel there, so no multipliers make
    the point stationary and the stationarity gate is skipped.
    """
    _, vecs = np.linalg.eigh(shift_matrix(problem.size, 1))
    x = canonical_form(vecs[:, -1])
    return build_outcome(problem, active, x, require_stationary=False)


def solve_subproblem(
    problem: ReducedProblem,
    active: ActiveSet,
    schedule: PenaltySchedule,
    starts: Iterable[np.ndarray],
) -> SolveOutcome:
    """
    Solve one active-set subproblem by penalty continuation.

    Each start is normalized, then minimized at every weight of the
    schedule, warm-started from the previous stage. A run is dropped when
    theta(mu) decreases along the schedule or the final mu * alpha(x)
    exceeds 1e-6. Survivors are polished on the KKT system (least-squares
    multipliers when the polish fails), and the best run by objective that
    passes the coefficient gate and the stationarity check is returned
    canonical.

    Raises:
        AllStartsFailed: If no start converges
    """
    logger = get_logger()
    starts = [np.asarray(s, dtype=float) for s in starts]
    if not starts:
        raise DomainError("solve_subproblem needs at least one start vector")
    if problem.a >= fejer_bound(problem.n) - FEJER_EDGE:
        outcome = _fejer_outcome(problem, active)
        if outcome.converged:
            return outcome
        raise AllStartsFailed(f"active set {active.label()} is infeasible at the Fejer endpoint")

    best: Optional[SolveOutcome] = None
    for index, start in enumerate(starts):
        norm = float(np.linalg.norm(start))
        if norm == 0 or start.size != problem.size:
            continue
        x = start / norm
        theta = []
        try:
            for mu in schedule.mu_values:
                result = newton_minimize(
                    lambda y, mu=mu: penalty_objective(problem, active, mu, y), x, schedule.newton
                )
                x = result.x
                theta.append(result.value)
        except NotConverged as e:
            logger.debug(f"n={problem.n} a={problem.a:.9f} {active.label()} start {index}: {e}")
            continue

        mu = schedule.final_mu
        if not theta_monotone(theta):
            logger.debug(f"start {index}: theta decreased along the schedule {theta}")
            continue
        penalty_term = mu * penalty_alpha(problem, active, x)
        if penalty_term > PENALTY_TERM_TOL:
            logger.debug(f"start {index}: mu * alpha = {penalty_term:.3e} at the final weight")
            continue

        polished = kkt_polish(problem, active, x, penalty_multipliers(problem, active, mu, x))
        if polished is None:
            multipliers = least_squares_multipliers(problem, active, x)
        else:
            x, multipliers = polished
        x = canonical_form(x)
        outcome = build_outcome(problem, active, x, multipliers, True, mu, theta, penalty_term)
        if coefficient_gate(x) > GATE_TOL:
            logger.debug(f"start {index}: coefficient gate failed")
            continue
        if not outcome.converged:
            logger.debug(
                f"start {index}: residuals {outcome.residual_h1:.2e}, {outcome.residual_h2:.2e}, "
                f"kkt {outcome.kkt_residual_norm:.2e}"
            )
            continue
        if best is None or _better(outcome, best):
            best = outcome

    if best is None:
        raise AllStartsFailed(
            f"no start converged for n={problem.n}, a={problem.a}, active {active.label()}"
        )
    return best


def _better(candidate: SolveOutcome, incumbent: SolveOutcome) -> bool:
    if candidate.objective_F < incumbent.objective_F - TIE_TOL:
        return True
    if candidate.objective_F > incumbent.objective_F + TIE_TOL:
        return False
    return _lex_key(candidate.x) > _lex_key(incumbent.x)


@dataclass(frozen=True)
class SubproblemResult:
    """Outcome of one active set (None when every start failed)."""

    subproblem_id: int
    active: ActiveSet
    outcome: Optional[SolveOutcome]

    @property
    def feasible(self) -> bool:
        return self.outcome is not None and self.outcome.feasible


def start_vectors(
    problem: ReducedProblem,
    restarts: int,
    seed: int,
    subproblem_id: int = 0,
    warm: Optional[np.ndarray] = None,
) -> list[np.ndarray]:
    """
    Start vectors: the warm start, published starts, then seeded random ones.

    The random stream depends only on (seed, n, a, subproblem) so parallel
    and sequential runs draw identical vectors.
    """
    starts = []
    if warm is not None and np.linalg.norm(warm) > 0:
        starts.append(np.asarray(warm, dtype=float))
    starts.extend(published_starts(problem.n, problem.a))
    if restarts > 0:
        entropy = [int(seed), int(problem.n), int(round(problem.a * 1e9)), int(subproblem_id)]
        rng = np.random.default_rng(np.random.SeedSequence(entropy))
        for _ in range(restarts):
            v = rng.uniform(-1.0, 1.0, problem.size)
            starts.append(v / np.linalg.norm(v))
    return starts


def enumerate_subproblems(
    problem: ReducedProblem,
    schedule: PenaltySchedule,
    restarts: int = 2,
    seed: int = 42,
    warm: Optional[np.ndarray] = None,
) -> list[SubproblemResult]:
    """Solve every active-set subproblem of a reduced problem."""
    results = []
    for active in problem.active_sets():
        sid = active.subproblem_id(problem)
        starts = start_vectors(problem, restarts, seed, sid, warm)
        try:
            outcome = solve_subproblem(problem, active, schedule, starts)
        except AllStartsFailed as e:
            get_logger().debug(str(e))
            outcome = None
        results.append(SubproblemResult(sid, active, outcome))
    return results


def select_best(results: Sequence[SubproblemResult]) -> SubproblemResult:
    """
    Lowest objective among feasible subproblem outcomes.

    Raises:
        Infeasible: If no subproblem is feasible
    """
    best = None
    for item in results:
        if not item.feasible:
            continue
        if best is None or _better(item.outcome, best.outcome):
            best = item
    if best is None:
        raise Infeasible("no active-set subproblem produced a feasible outcome")
    return best


def chi_reduced(
    problem: ReducedProblem,
    schedule: PenaltySchedule,
    restarts: int = 2,
    seed: int = 42,
    warm: Optional[np.ndarray] = None,
) -> tuple[float, SolveOutcome, int]:
    """
    Reduced optimum at a over all active-set subproblems.

    Returns:
        Tuple of (chi, best outcome, subproblem id)

    Raises:
        Infeasible: If no subproblem yields a feasible converged outcome
    """
    if restarts < 0:
        raise DomainError("restarts must be nonnegative")
    best = select_best(enumerate_subproblems(problem, schedule, restarts, seed, warm))
    if not best.outcome.multipliers_valid:
        get_logger().warning(
            f"n={problem.n} a={problem.a:.9f}: selected outcome has negative multipliers "
            f"{best.outcome.multipliers.u}"
        )
    return best.outcome.objective_F, best.outcome, best.subproblem_id


def certify_full(outcome: SolveOutcome, n: int, tol: float = INEQ_TOL) -> CertificateReport:
    """
    Check an outcome against every constraint of the full problem.

    All G_j for j = 1..n-1 must be >= -tol and the induced polynomial must
    pass membership; then the reduced optimum equals chi_n(a).
    """
    x = np.asarray(outcome.x, dtype=float)
    if x.size != n + 1:
        raise DomainError(f"witness has length {x.size}, expected {n + 1}")
    ineq = inequality_values(x)
    failures = [f"G_{j} = {v:.3e}" for j, v in ineq.items() if v < -tol]
    if not outcome.converged:
        failures.insert(0, "not converged")
    membership = membership_c_n(from_spectral_factor(x), tol)
    failures.extend(c.value for c in membership.violated_conditions)
    return CertificateReport(
        passed=not failures,
        membership=membership,
        inequality_values=ineq,
        failures=tuple(failures),
        slack=slater_slack(outcome),
    )


def kkt_residual(problem: ReducedProblem, active: ActiveSet, outcome: SolveOutcome) -> float:
    """Norm of grad F + l1 grad H1 + l2 grad H2 - sum u_j grad G_j at outcome.x."""
    mult = outcome.multipliers
    if set(mult.u) - set(problem.kept):
        raise DomainError("outcome multipliers do not match the problem's kept set")
    return _stationarity(problem, np.asarray(outcome.x, dtype=float), mult)


def slater_slack(outcome: SolveOutcome) -> float:
    """Smallest value of the kept inequalities left inactive (inf when none)."""
    inactive = [j for j in outcome.problem.kept if j not in outcome.active.active]
    if not inactive:
        return math.inf
    return min(outcome.inequality_values[j] for j in inactive)
