"""
Invariant checks on the coefficient tables of one knot vector.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from ..conversion import SpanTable, convert_span_deboor, convert_span_new, reconstruct
from ..knots import KnotVector
from ..oracle import deboor_cox_eval

logger = logging.getLogger(__name__)

Converter = Callable[[KnotVector, int], SpanTable]


@dataclass(frozen=True)
class VerificationTolerances:
    """Tolerances of the float checks; the sparsity check is always exact."""

    partition: float = 1e-12
    equivalence: float = 1e-10
    reconstruction: float = 1e-12
    samples_per_span: int = 100

    @classmethod
    def from_config(cls, section: Dict[str, Any]) -> "VerificationTolerances":
        return cls(
            partition=float(section.get('partition_tolerance', cls.partition)),
            equivalence=float(section.get('equivalence_tolerance', cls.equivalence)),
            reconstruction=float(section.get('reconstruction_tolerance', cls.reconstruction)),
            samples_per_span=int(section.get('samples_per_span', cls.samples_per_span)),
        )


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    detail: str = ""


@dataclass
class VerificationReport:
    degree: int
    spans: int
    checked_spans: List[int]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def format_text(self) -> str:
        lines = [f"degree {self.degree}, {self.spans} spans, {len(self.checked_spans)} non-empty"]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status}  {check.name:<16} max deviation {check.max_deviation:.3e} (tolerance {check.tolerance:.1e})"
            if check.detail:
                line += f"  {check.detail}"
            lines.append(line)
        lines.append("all checks passed" if self.passed else f"{len(self.failed())} check(s) failed")
        return '\n'.join(lines) + '\n'


def sample_points(kv: KnotVector, j: int, count: int) -> List[float]:
    """``count`` evenly spaced points in [t_j, t_{j+1}), starting at t_j."""
    tj, tj1 = float(kv.knot(j)), float(kv.knot(j + 1))
    return [tj + (tj1 - tj) * s / count for s in range(count)]


class _Tracker:
    """Largest deviation seen so far and where it happened."""

    def __init__(self) -> None:
        self.value = 0.0
        self.where = ""

    def update(self, deviation: float, where: str) -> None:
        if deviation > self.value:
            self.value = deviation
            self.where = where


def run_checks(kv: KnotVector, converter: Optional[Converter] = None,
               tolerances: Optional[VerificationTolerances] = None) -> VerificationReport:
    """
    Check every non-empty span of ``kv`` with tables from ``converter``.

    Checks: partition of unity per row, nonnegativity, boundary sparsity,
    agreement with the O(m^3) method, and reconstruction against de Boor-Cox.
    """
    converter = converter or convert_span_new
    tolerances = tolerances or VerificationTolerances()
    m = kv.degree
    spans = kv.nonempty_spans()

    partition, negative, sparsity = _Tracker(), _Tracker(), _Tracker()
    equivalence, recon = _Tracker(), _Tracker()

    for j in spans:
        table = converter(kv, j)
        values = table.to_array()
        reference = convert_span_deboor(kv, j).to_array()

        for k in range(m + 1):
            partition.update(abs(float(values[k].sum()) - 1.0), f"span {j} row {k}")
        negative.update(max(0.0, -float(values.min())), f"span {j}")
        if m >= 1:
            boundary = max(float(abs(values[1:, 0]).max()), float(abs(values[:m, m]).max()))
            sparsity.update(boundary, f"span {j}")

        scale = abs(reference).clip(min=1.0)
        equivalence.update(float((abs(values - reference) / scale).max()), f"span {j}")

        for u in sample_points(kv, j, tolerances.samples_per_span):
            for i in table.indices:
                expected = float(deboor_cox_eval(kv, i, u))
                got = float(reconstruct(table, kv, i, u))
                recon.update(abs(got - expected) / max(1.0, abs(expected)), f"span {j} i={i} u={u!r}")

    checks = [
        _result('partition', partition, tolerances.partition),
        _result('nonnegativity', negative, tolerances.partition),
        _result('sparsity', sparsity, 0.0),
        _result('equivalence', equivalence, tolerances.equivalence),
        _result('reconstruction', recon, tolerances.reconstruction),
    ]
    report = VerificationReport(degree=m, spans=kv.spans, checked_spans=spans, checks=checks)
    for check in report.failed():
        logger.warning(f"Check {check.name} failed", extra={'max_deviation': check.max_deviation,
                                                              'detail': check.detail})
    return report


def _result(name: str, tracker: _Tracker, tolerance: float) -> CheckResult:
    passed = tracker.value <= tolerance
    return CheckResult(name=name, passed=passed, max_deviation=tracker.value, tolerance=tolerance,
                       detail="" if passed else f"at {tracker.where}")
