"""
B-spline values and derivatives by the de Boor-Cox recurrence.

Quotients Q / (t_k - t_l) with t_k = t_l are taken as 0, and N_{p,q} is 0
for q < -p or q >= n. Inside [t_0, t_n] the degree-0 seed is the indicator of
the span returned by find_span, so u = t_n belongs to the last non-empty span.
"""

import logging
from typing import Any, List, Optional, Tuple

from ..arithmetic import ScalarField, field_for
from ..knots import KnotVector, find_span
from .divided_difference import BSplineValue

logger = logging.getLogger(__name__)


def _prepare(kv: KnotVector, u: Any) -> Tuple[ScalarField, Tuple[Any, ...], Any]:
    field = field_for(kv.values + (u,))
    return field, kv.in_field(field), field.convert(u)


def _seed_span(kv: KnotVector, u: Any) -> Optional[int]:
    t0, tn = kv.domain
    if t0 <= u <= tn:
        return find_span(kv, u)
    return None


def _basis_value(kv: KnotVector, knots: Tuple[Any, ...], field: ScalarField,
                 degree: int, i: int, u: Any, span: Optional[int]) -> Any:
    """N_{degree,i}(u) for degree <= m on the knots of ``kv``."""
    m, n = kv.degree, kv.spans
    if i < -degree or i >= n:
        return field.zero

    def t(q: int) -> Any:
        return knots[q + m]

    values: List[Any] = []
    for q in range(i, i + degree + 1):
        if span is not None:
            inside = q == span
        else:
            inside = t(q) <= u < t(q + 1)
        values.append(field.one if inside else field.zero)

    for p in range(1, degree + 1):
        for offset in range(degree - p + 1):
            q = i + offset
            if q < -p or q >= n:
                values[offset] = field.zero
                continue
            value = field.zero
            if t(q + p) != t(q):
                value = value + (u - t(q)) / (t(q + p) - t(q)) * values[offset]
            if t(q + p + 1) != t(q + 1):
                value = value + (t(q + p + 1) - u) / (t(q + p + 1) - t(q + 1)) * values[offset + 1]
            values[offset] = value
    return values[0]


def deboor_cox_eval_degree(kv: KnotVector, degree: int, i: int, u: Any) -> Any:
    """N_{p,i}(u) for any p <= m, built on the knots of ``kv``."""
    if not 0 <= degree <= kv.degree:
        raise ValueError(f"degree {degree} outside 0..{kv.degree}")
    field, knots, u = _prepare(kv, u)
    return _basis_value(kv, knots, field, degree, i, u, _seed_span(kv, u))


def deboor_cox_eval(kv: KnotVector, i: int, u: Any) -> Any:
    """N_{m,i}(u) by the triangular de Boor-Cox recurrence."""
    return deboor_cox_eval_degree(kv, kv.degree, i, u)


def deboor_cox_derivative(kv: KnotVector, i: int, u: Any) -> Any:
    """N'_{m,i}(u) = m (N_{m-1,i} / (t_{m+i} - t_i) - N_{m-1,i+1} / (t_{m+i+1} - t_{i+1}))."""
    m = kv.degree
    field, knots, u = _prepare(kv, u)
    if m == 0 or i < -m or i >= kv.spans:
        return field.zero

    def t(q: int) -> Any:
        return knots[q + m]

    span = _seed_span(kv, u)
    derivative = field.zero
    if t(m + i) != t(i):
        left = _basis_value(kv, knots, field, m - 1, i, u, span)
        derivative = derivative + left / (t(m + i) - t(i))
    if t(m + i + 1) != t(i + 1):
        right = _basis_value(kv, knots, field, m - 1, i + 1, u, span)
        derivative = derivative - right / (t(m + i + 1) - t(i + 1))
    return m * derivative


def evaluate_bspline(kv: KnotVector, i: int, u: Any, with_derivative: bool = False) -> BSplineValue:
    value = deboor_cox_eval(kv, i, u)
    derivative = deboor_cox_derivative(kv, i, u) if with_derivative else None
    return BSplineValue(value=value, derivative=derivative)
