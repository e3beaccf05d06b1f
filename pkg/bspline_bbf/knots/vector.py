"""
Knot vector representation, validation and span location.

Knots are addressed with their natural indices t_{-m}, ..., t_{n+m}; the
offset into the stored tuple is handled here so that every caller can write
formulas with the same indices as the recurrences they implement.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from ..arithmetic import ScalarField

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class KnotValidationError(Exception):
    """Raised when a raw knot sequence cannot form a KnotVector."""

    message: str
    code: str = "KnotValidationError"
    index: Optional[int] = None
    value: Optional[Any] = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class NotNondecreasing(KnotValidationError):
    """Adjacent knots are out of order."""


class DegenerateDomain(KnotValidationError):
    """t_0 = t_n, the domain is a single point."""


class InnerMultiplicityTooHigh(KnotValidationError):
    """An inner knot is repeated more than m times."""


class LengthMismatch(KnotValidationError):
    """The number of knots differs from n + 2m + 1."""


class InvalidShape(KnotValidationError):
    """Negative degree or fewer than one span."""


class OutOfDomain(KnotValidationError):
    """A parameter lies outside [t_0, t_n]."""


@dataclass(frozen=True)
class KnotVector:
    """
    Validated knot sequence t_{-m} <= ... <= t_{n+m} with t_0 < t_n.

    Instances are immutable; build them through ``validate``.
    """

    degree: int
    spans: int
    values: Tuple[Any, ...]

    def knot(self, i: int) -> Any:
        """Knot t_i in natural indexing (i from -m to n+m)."""
        position = i + self.degree
        if not 0 <= position < len(self.values):
            raise IndexError(f"knot index {i} outside [-{self.degree}, {self.spans + self.degree}]")
        return self.values[position]

    @property
    def domain(self) -> Tuple[Any, Any]:
        return self.knot(0), self.knot(self.spans)

    def span_bounds(self, j: int) -> Tuple[Any, Any]:
        return self.knot(j), self.knot(j + 1)

    def is_nonempty(self, j: int) -> bool:
        return 0 <= j < self.spans and self.knot(j) < self.knot(j + 1)

    def nonempty_spans(self) -> List[int]:
        return [j for j in range(self.spans) if self.knot(j) < self.knot(j + 1)]

    def is_clamped(self) -> bool:
        """Both boundary blocks are (m+1)-fold."""
        left = self.values[: self.degree + 1]
        right = self.values[self.spans + self.degree:]
        return len(set(left)) == 1 and len(set(right)) == 1

    def in_field(self, field: ScalarField) -> Tuple[Any, ...]:
        """Knot values converted into ``field`` (same offset as ``values``)."""
        return field.convert_all(self.values)

    def to_dict(self) -> dict:
        return {'degree': self.degree, 'spans': self.spans, 'knots': list(self.values)}


def _check_shape(degree: int, spans: int, values: Sequence[Any]) -> None:
    if degree < 0:
        raise InvalidShape(f"degree must be nonnegative, got {degree}",
                           code="InvalidShape", value=degree)
    if spans < 1:
        raise InvalidShape(f"span count must be positive, got {spans}",
                           code="InvalidShape", value=spans)
    expected = spans + 2 * degree + 1
    if len(values) != expected:
        raise LengthMismatch(
            f"expected n + 2m + 1 = {expected} knots for m={degree}, n={spans}, got {len(values)}",
            code="LengthMismatch", value=len(values))


def validate(raw_degree: int, raw_spans: int, raw_values: Sequence[Any]) -> KnotVector:
    """
    Build a KnotVector from raw input.

    Args:
        raw_degree: degree m >= 0
        raw_spans: number n >= 1 of index spans between t_0 and t_n
        raw_values: knots t_{-m}, ..., t_{n+m}

    Returns:
        Validated, immutable KnotVector

    Raises:
        LengthMismatch, NotNondecreasing, DegenerateDomain, InnerMultiplicityTooHigh
    """
    degree, spans = int(raw_degree), int(raw_spans)
    values = tuple(raw_values)
    _check_shape(degree, spans, values)

    for position in range(len(values) - 1):
        left, right = values[position], values[position + 1]
        if not left <= right:
            raise NotNondecreasing(
                f"t_{position - degree} = {left} > t_{position + 1 - degree} = {right}",
                code="NotNondecreasing", index=position - degree, value=left)

    t0, tn = values[degree], values[spans + degree]
    if not t0 < tn:
        raise DegenerateDomain(f"t_0 = t_n = {t0}", code="DegenerateDomain", index=0, value=t0)

    for i in range(1, spans):
        value = values[i + degree]
        count = _count_equal(values, value)
        if count > degree:
            raise InnerMultiplicityTooHigh(
                f"inner knot t_{i} = {value} has multiplicity {count} > m = {degree}",
                code="InnerMultiplicityTooHigh", index=i, value=value)

    kv = KnotVector(degree=degree, spans=spans, values=values)
    logger.debug("Validated knot vector", extra={'degree': degree, 'spans': spans})
    return kv


def _count_equal(values: Sequence[Any], value: Any) -> int:
    return sum(1 for v in values if v == value)


def multiplicity(kv: KnotVector, value: Any) -> int:
    """Number of knots exactly equal to ``value``."""
    return _count_equal(kv.values, value)


def find_span(kv: KnotVector, u: Any) -> int:
    """
    Index j of the non-empty span [t_j, t_{j+1}) containing u.

    u = t_n is mapped to the last non-empty span.

    Raises:
        OutOfDomain: u < t_0 or u > t_n
    """
    t0, tn = kv.domain
    if u < t0 or u > tn:
        raise OutOfDomain(f"u = {u} outside [{t0}, {tn}]", code="OutOfDomain", value=u)
    if u == tn:
        return bisect_left(kv.values, tn) - 1 - kv.degree
    return bisect_right(kv.values, u) - 1 - kv.degree
