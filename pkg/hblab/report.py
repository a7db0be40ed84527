"""Outcome records of verification suites."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

SCHEMA_VERSION = 1


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


def _finite_or_none(x):
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


@dataclass(frozen=True)
class Check:
    """One verified statement: ``lhs <= rhs`` for inequalities, ``|lhs - rhs| <= tol`` for equalities.

    ``margin`` is positive when the statement holds with room to spare.
    """

    id: str
    status: CheckStatus
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    margin: Optional[float] = None
    worst: Optional[complex] = None
    target: str = ""
    detail: str = ""

    @classmethod
    def inequality(cls, id, lhs, rhs, tol=0.0, worst=None, target="", detail=""):
        lhs, rhs = float(lhs), float(rhs)
        margin = rhs - lhs
        status = CheckStatus.PASS if margin >= -tol else CheckStatus.FAIL
        return cls(id, status, lhs, rhs, margin, worst, target, detail)

    @classmethod
    def equality(cls, id, value, expected, tol, worst=None, target="", detail=""):
        value, expected = float(value), float(expected)
        margin = tol - abs(value - expected)
        status = CheckStatus.PASS if margin >= 0 else CheckStatus.FAIL
        return cls(id, status, value, expected, margin, worst, target, detail)

    @classmethod
    def flag(cls, id, ok, target="", detail=""):
        return cls(id, CheckStatus.PASS if ok else CheckStatus.FAIL, target=target, detail=detail)

    @classmethod
    def estimate(cls, id, estimate, target=""):
        """Record a scanned supremum; a diverged scan is a skip carrying its growth exponent."""
        if estimate.diverged:
            return cls(
                id, CheckStatus.SKIP, estimate.value, worst=estimate.argmax, target=target,
                detail="diverged, exponent %.4f" % estimate.exponent,
            )
        return cls(id, CheckStatus.PASS, estimate.value, worst=estimate.argmax, target=target, detail="value %.9g" % estimate.value)

    @classmethod
    def skip(cls, id, reason, target=""):
        return cls(id, CheckStatus.SKIP, target=target, detail=reason)

    def with_target(self, target):
        if self.target:
            return self
        return Check(self.id, self.status, self.lhs, self.rhs, self.margin, self.worst, target, self.detail)

    def as_dict(self):
        return {
            "id": self.id,
            "target": self.target,
            "status": self.status.value,
            "lhs": _finite_or_none(self.lhs),
            "rhs": _finite_or_none(self.rhs),
            "margin": _finite_or_none(self.margin),
            "worst": None if self.worst is None else [float(self.worst.real), float(self.worst.imag)],
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    target: str
    checks: List[Check] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    runtime_ms: int = 0

    def count(self, status):
        return sum(1 for c in self.checks if c.status is status)

    @property
    def failed(self):
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def passed(self):
        return not self.failed

    def as_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "target": self.target,
            "summary": {s.value: self.count(s) for s in CheckStatus},
            "checks": [c.as_dict() for c in self.checks],
            "config": self.config,
            "runtime_ms": self.runtime_ms,
        }
