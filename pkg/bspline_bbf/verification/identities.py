"""
Identities between B-splines of degree m and m-1.

For -m <= i <= n-1, with Q / (t_k - t_l) := 0 when t_k = t_l:

    first:   m N_{m,i} + (t_{m+i+1} - u) N'_{m,i} = m (t_{m+i+1} - t_i) N_{m-1,i} / (t_{m+i} - t_i)
    second:  m N_{m,i} + (t_i - u) N'_{m,i}       = m (t_{m+i+1} - t_i) N_{m-1,i+1} / (t_{m+i+1} - t_{i+1})

and for -m <= i <= n-2 the same-degree differential recurrence

    N_{m,i} + (t_i - u)/m N'_{m,i} = v_{m,i} (N_{m,i+1} + (t_{m+i+2} - u)/m N'_{m,i+1}),
    v_{m,i} = (t_{m+i+1} - t_i) / (t_{m+i+2} - t_{i+1}).

Each function returns (lhs, rhs) as piecewise polynomials so the identity can
be checked exactly over rationals. Sampled variants use the oracle instead.
"""

import logging
from typing import Any, Callable, Dict, Iterable, Optional, Tuple

from ..arithmetic import FLOAT, ScalarField
from ..conversion import SpanTable
from ..knots import KnotVector
from ..oracle import deboor_cox_derivative, deboor_cox_eval, deboor_cox_eval_degree
from .piecewise import BasisCatalog, PiecewisePolynomial

logger = logging.getLogger(__name__)

IdentityPair = Tuple[PiecewisePolynomial, PiecewisePolynomial]


def _quotient(numerator: Any, a: Any, b: Any) -> Any:
    """numerator / (a - b), or 0 when a = b."""
    if a == b:
        return numerator * 0
    return numerator / (a - b)


def _knots(kv: KnotVector, field: ScalarField) -> Callable[[int], Any]:
    values, offset = kv.in_field(field), kv.degree

    def t(q: int) -> Any:
        return values[q + offset]
    return t


def _check_index(kv: KnotVector, i: int, upper: int) -> None:
    if kv.degree < 1:
        raise ValueError("identities need degree m >= 1")
    if not -kv.degree <= i <= upper:
        raise IndexError(f"B-spline index {i} outside [-{kv.degree}, {upper}]")


def first_identity(kv: KnotVector, i: int, field: ScalarField,
                   catalog: Optional[BasisCatalog] = None) -> IdentityPair:
    _check_index(kv, i, kv.spans - 1)
    catalog = catalog or BasisCatalog(kv, field)
    m = kv.degree
    t = _knots(kv, field)
    n_mi = catalog.bspline(m, i)
    lhs = n_mi.scale(m) + n_mi.derivative().times_affine(t(m + i + 1), -1)
    factor = _quotient(m * (t(m + i + 1) - t(i)), t(m + i), t(i))
    rhs = catalog.bspline(m - 1, i).scale(factor)
    return lhs, rhs


def second_identity(kv: KnotVector, i: int, field: ScalarField,
                    catalog: Optional[BasisCatalog] = None) -> IdentityPair:
    _check_index(kv, i, kv.spans - 1)
    catalog = catalog or BasisCatalog(kv, field)
    m = kv.degree
    t = _knots(kv, field)
    n_mi = catalog.bspline(m, i)
    lhs = n_mi.scale(m) + n_mi.derivative().times_affine(t(i), -1)
    factor = _quotient(m * (t(m + i + 1) - t(i)), t(m + i + 1), t(i + 1))
    rhs = catalog.bspline(m - 1, i + 1).scale(factor)
    return lhs, rhs


def _shifted(n_mi: PiecewisePolynomial, anchor: Any, m: int, field: ScalarField) -> PiecewisePolynomial:
    """N + (anchor - u)/m N'."""
    inv = field.ratio(1, m)
    return n_mi + n_mi.derivative().times_affine(anchor * inv, -inv)


def differential_recurrence(kv: KnotVector, i: int, field: ScalarField,
                            catalog: Optional[BasisCatalog] = None) -> IdentityPair:
    _check_index(kv, i, kv.spans - 2)
    catalog = catalog or BasisCatalog(kv, field)
    m = kv.degree
    t = _knots(kv, field)
    lhs = _shifted(catalog.bspline(m, i), t(i), m, field)
    v = _quotient(t(m + i + 1) - t(i), t(m + i + 2), t(i + 1))
    rhs = _shifted(catalog.bspline(m, i + 1), t(m + i + 2), m, field).scale(v)
    return lhs, rhs


def main_recurrence_residual(kv: KnotVector, table: SpanTable,
                             field: ScalarField = FLOAT) -> Any:
    """
    Largest |B[k,i] - rhs| of the same-degree coefficient recurrence over
    k = m-1..0 and interior columns i = j-m+1..j-1 of ``table``.
    """
    m, j = table.degree, table.span
    worst = field.zero
    if m < 2:
        return worst
    t = _knots(kv, field)

    def b(k: int, i: int) -> Any:
        return field.convert(table.get(k, i))

    tj, tj1 = t(j), t(j + 1)
    for i in range(j - m + 1, j):
        h = tj1 - t(i)
        v = _quotient(t(m + i + 1) - t(i), t(m + i + 2), t(i + 1))
        for k in range(m - 1, -1, -1):
            rhs = (tj - t(i)) / h * b(k + 1, i) + v / h * (
                (tj1 - t(m + i + 2)) * b(k, i + 1) + (t(m + i + 2) - tj) * b(k + 1, i + 1))
            worst = max(worst, abs(b(k, i) - rhs))
    return worst


def sampled_identity_residuals(kv: KnotVector, i: int, points: Iterable[Any]) -> Dict[str, float]:
    """
    Largest residual of each identity at ``points`` using de Boor-Cox values.

    Residuals are relative to max(1, |lhs|).
    """
    m = kv.degree
    _check_index(kv, i, kv.spans - 1)
    t = kv.knot
    worst = {'first': 0.0, 'second': 0.0, 'differential_recurrence': 0.0}

    def record(name: str, lhs: Any, rhs: Any) -> None:
        residual = abs(float(lhs) - float(rhs)) / max(1.0, abs(float(lhs)))
        worst[name] = max(worst[name], residual)

    for u in points:
        value = deboor_cox_eval(kv, i, u)
        slope = deboor_cox_derivative(kv, i, u)
        lower_i = deboor_cox_eval_degree(kv, m - 1, i, u)
        lower_next = deboor_cox_eval_degree(kv, m - 1, i + 1, u)
        width = t(m + i + 1) - t(i)
        record('first', m * value + (t(m + i + 1) - u) * slope,
               _quotient(m * width * lower_i, t(m + i), t(i)))
        record('second', m * value + (t(i) - u) * slope,
               _quotient(m * width * lower_next, t(m + i + 1), t(i + 1)))
        if i <= kv.spans - 2:
            v = _quotient(width, t(m + i + 2), t(i + 1))
            lhs = value + (t(i) - u) / m * slope
            rhs = v * (deboor_cox_eval(kv, i + 1, u)
                       + (t(m + i + 2) - u) / m * deboor_cox_derivative(kv, i + 1, u))
            record('differential_recurrence', lhs, rhs)
    return worst
