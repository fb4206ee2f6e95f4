"""Identity verification records and their deterministic serialization.

A report captures one identity checked at one parameter point: both evaluated
sides, the absolute residual, the tolerance in force, and the verdict.  JSON
output is reproducible byte for byte: fields appear in fixed order, floats use
shortest round-trip formatting (at most 17 significant digits), and complex
numbers are emitted as [re, im] pairs.  Wall-clock timings stay in memory
only, never in the serialized form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

IDENTITY_IDS = ("T1", "T2", "T3", "EQ4", "EQ5", "EQ9", "EQ12", "EQ13", "EQ15")


def _encode(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity instance; passed is residual <= tolerance."""

    identity_id: str
    instance: dict
    lhs: complex | None
    rhs: complex | None
    residual: float | None
    tolerance: float
    passed: bool
    elapsed: float = 0.0
    error: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "instance": {k: _encode(v) for k, v in self.instance.items()},
            "lhs": _encode(self.lhs),
            "rhs": _encode(self.rhs),
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "error": self.error,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict())


def make_report(identity_id: str, instance: dict, lhs: complex, rhs: complex,
                tolerance: float, elapsed: float = 0.0) -> IdentityReport:
    """Assemble a report from two evaluated sides (coerced to plain Python
    scalars so serialization never sees numpy types)."""
    lhs, rhs, tolerance = complex(lhs), complex(rhs), float(tolerance)
    residual = abs(lhs - rhs)
    return IdentityReport(
        identity_id=identity_id,
        instance=instance,
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        tolerance=tolerance,
        passed=bool(residual <= tolerance),
        elapsed=elapsed,
    )


def make_error_report(identity_id: str, instance: dict, tolerance: float,
                      error: Exception, elapsed: float = 0.0) -> IdentityReport:
    """Record a per-instance failure without aborting the surrounding sweep."""
    return IdentityReport(
        identity_id=identity_id,
        instance=instance,
        lhs=None,
        rhs=None,
        residual=None,
        tolerance=tolerance,
        passed=False,
        elapsed=elapsed,
        error=f"{type(error).__name__}: {error}",
    )


def reports_to_json_lines(reports: list[IdentityReport]) -> str:
    return "\n".join(r.to_json_line() for r in reports)


def parse_json_line(line: str) -> dict:
    """Inverse of to_json_line at the dict level (complex stays [re, im])."""
    return json.loads(line)


def suite_passed(reports: list[IdentityReport]) -> bool:
    """A sweep passes only if every instance passed; empty sweeps pass."""
    return all(r.passed for r in reports)
