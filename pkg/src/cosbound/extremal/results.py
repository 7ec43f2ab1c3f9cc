"""Result types produced by the extremal solvers."""

import math
from dataclasses import dataclass, field
from typing import Optional

from ..core.records import polynomial_record
from ..core.trigpoly import CosinePolynomial, MembershipReport, SpectralFactor


@dataclass(frozen=True)
class CertificateReport:
    """Evidence that a witness is feasible for the full problem."""

    passed: bool
    membership: MembershipReport
    inequality_values: dict[int, float] = field(default_factory=dict)
    failures: tuple[str, ...] = ()
    slack: float = math.inf

    @property
    def min_inequality(self) -> float:
        if not self.inequality_values:
            return math.inf
        return min(self.inequality_values.values())

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failures": list(self.failures),
            "inequality_values": {str(j): v for j, v in sorted(self.inequality_values.items())},
            "slack": self.slack,
            "membership": self.membership.to_dict(),
        }


@dataclass(frozen=True)
class SweepRecord:
    """One a-grid point of a sweep."""

    a: float
    chi: float
    ratio: float
    subproblem_id: int
    certified: bool
    outcome: Optional[object] = None
    multipliers_valid: bool = True

    def to_row(self) -> dict:
        return {
            "a": self.a,
            "chi": self.chi,
            "ratio": self.ratio,
            "subproblem": self.subproblem_id,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class VnResult:
    """A computed constant V_n with its witness."""

    n: int
    interval: tuple[float, float]
    v_value: float
    a_star: float
    witness: CosinePolynomial
    certificate: CertificateReport
    witness_factor: Optional[SpectralFactor] = None
    alpha_star: Optional[float] = None
    grid_points: int = 0
    seed: Optional[int] = None
    runtime: float = 0.0
    notes: tuple[str, ...] = ()

    @property
    def certified(self) -> bool:
        return self.certificate.passed

    def to_record(self) -> dict:
        """JSON record; runtime is left out so reruns are byte-identical."""
        record = {
            "n": self.n,
            "interval": [self.interval[0], self.interval[1]],
            "v": self.v_value,
            "a_star": self.a_star,
            "witness_coeffs": list(self.witness.coeffs),
            "witness_factor": (
                list(self.witness_factor.entries) if self.witness_factor is not None else None
            ),
            "certified": self.certified,
            "grid_points": self.grid_points,
            "seed": self.seed,
        }
        if self.alpha_star is not None:
            record["alpha_star"] = self.alpha_star
        if self.notes:
            record["notes"] = list(self.notes)
        if self.n >= 4:
            # smallest kept inequality left inactive; null when all are active
            record["inequality_slack"] = self.certificate.slack
        return record

    def witness_record(self) -> dict:
        return polynomial_record(self.witness.coeffs)
