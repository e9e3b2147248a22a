"""Estimates, identity checks, and the JSON report they serialize to."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Method tags.  The first four describe how a series value was obtained; the
# rest tag the non-series legs that identity checks compare against.
PARTIAL_SUM = "partial_sum"
ACCELERATED_SUM = "accelerated_sum"
EULER_PRODUCT = "euler_product"
CLOSED_FORM = "closed_form"
EXTRAPOLATED = "extrapolated_sum"
QUADRATURE = "quadrature"
RECURRENCE = "recurrence"
BRUTE_FORCE = "brute_force"
EXACT = "exact"


@dataclass(frozen=True)
class SeriesEstimate:
    value: float
    s: float | None = None
    method: str = CLOSED_FORM
    cutoff: int = 0
    error_proxy: float = 0.0

    def __post_init__(self):
        if self.cutoff < 0 or self.error_proxy < 0:
            raise ValueError("cutoff and error_proxy must be nonnegative")
        if self.method == CLOSED_FORM and self.cutoff != 0:
            raise ValueError("closed-form estimates carry cutoff 0")

    def __float__(self) -> float:
        return float(self.value)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "s": self.s,
            "method": self.method,
            "cutoff": self.cutoff,
            "error_proxy": self.error_proxy,
        }


def exact(value: float, s: float | None = None, method: str = CLOSED_FORM) -> SeriesEstimate:
    return SeriesEstimate(float(value), s, method, 0, 0.0)


@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    lhs: SeriesEstimate
    rhs: SeriesEstimate
    tolerance: float
    s: float | None = None

    def __post_init__(self):
        if not self.tolerance >= 0:
            raise ValueError("tolerance must be nonnegative")

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs.value - self.rhs.value)

    @property
    def passed(self) -> bool:
        return math.isfinite(self.abs_diff) and self.abs_diff <= self.tolerance

    def as_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "s": self.s,
            "lhs": self.lhs.value,
            "rhs": self.rhs.value,
            "|lhs-rhs|": self.abs_diff,
            "tolerance": self.tolerance,
            "method_lhs": self.lhs.method,
            "method_rhs": self.rhs.method,
            "cutoff": max(self.lhs.cutoff, self.rhs.cutoff),
            "passed": self.passed,
        }

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (f"[{flag}] {self.identity_id}: |{self.lhs.value:.15g} - {self.rhs.value:.15g}| "
                f"= {self.abs_diff:.3e} <= {self.tolerance:.1e}")


def pairwise(identity_id: str, legs: dict[str, SeriesEstimate], tolerances: dict[str, float],
             default_tol: float, s: float | None = None) -> list[IdentityCheck]:
    """One check per unordered pair of legs; a pair uses the loosest tolerance of its two legs."""
    out = []
    for (a, ea), (b, eb) in itertools.combinations(legs.items(), 2):
        tol = max(tolerances.get(a, default_tol), tolerances.get(b, default_tol))
        out.append(IdentityCheck(f"{identity_id}:{a}~{b}", ea, eb, tol, s))
    return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[IdentityCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def extend(self, checks: Iterable[IdentityCheck]) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": sum(not c.passed for c in self.checks),
            "checks": [c.as_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"


def failed(checks: Sequence[IdentityCheck]) -> list[IdentityCheck]:
    return [c for c in checks if not c.passed]
