"""
Adjusted Bernstein-Bezier coefficients of all B-splines over one knot span.

The table for span [t_j, t_{j+1}) is built in O(m^2) operations:

1. diagonal seed b^{(j,j)}_{p,p}, p = 0..m
2. last coefficients b^{(i,j)}_{p,p} of every degree (triangular scheme)
3. first coefficient of N_{m,j-m} from its closed form
4. the remaining entries by the same-degree recurrence, k = m-1..0 and
   i = j-1..j-m+1; the boundary columns i = j-m and i = j are never swept

Every quotient Q / (t_k - t_l) with t_k = t_l is taken as 0 by branching on
knot equality before dividing.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..arithmetic import FLOAT, RATIONAL, ScalarField, field_for
from ..bernstein import BernsteinPoly, eval_poly
from ..knots import KnotVector
from .table import BmmColumn, ConversionError, EmptySpanError, OutOfSpanError, SpanTable

logger = logging.getLogger(__name__)


def resolve_degree(kv: KnotVector, m: Optional[int]) -> int:
    if m is None:
        return kv.degree
    if not 0 <= m <= kv.degree:
        raise ConversionError(f"degree {m} outside 0..{kv.degree} for this knot vector")
    return m


def span_knots(kv: KnotVector, j: int, field: ScalarField) -> Tuple[Any, ...]:
    """
    Knots of ``kv`` converted into ``field`` after checking that span j is usable.

    Raises:
        EmptySpanError: j outside 0..n-1 or t_j = t_{j+1}
    """
    if not 0 <= j < kv.spans:
        raise EmptySpanError(f"span index {j} outside 0..{kv.spans - 1}")
    if not kv.is_nonempty(j):
        raise EmptySpanError(f"span {j} is empty: t_{j} = t_{j + 1} = {kv.knot(j)}")
    return kv.in_field(field)


def _diagonal_seed(t: Tuple[Any, ...], o: int, j: int, m: int, field: ScalarField) -> List[Any]:
    seed = [field.one]
    if m == 0:
        return seed
    seed.append(field.one)
    tj = t[o + j]
    width = t[o + j + 1] - tj
    for p in range(2, m + 1):
        assert t[o + j + p] != tj, "inner multiplicity above m"
        seed.append(seed[p - 1] * (width / (t[o + j + p] - tj)))
    return seed


def _bmm_rows(t: Tuple[Any, ...], o: int, j: int, m: int, seed: List[Any],
              field: ScalarField) -> BmmColumn:
    tj1 = t[o + j + 1]
    prev: Tuple[Any, ...] = (seed[0],)
    rows: List[Tuple[Any, ...]] = [prev]
    for p in range(1, m + 1):
        # prev holds i = j-p+1..j, row holds i = j-p..j
        row: List[Any] = [field.zero] * (p + 1)
        row[p] = seed[p]
        for i in range(j - 1, j - p - 1, -1):
            c = i - (j - p)
            ti, ti1, tpi, tpi1 = t[o + i], t[o + i + 1], t[o + p + i], t[o + p + i + 1]
            value = None
            if i > j - p and tpi != ti:
                value = (tj1 - ti) / (tpi - ti) * prev[c - 1]
            if tpi1 != ti1:
                term = (tpi1 - tj1) / (tpi1 - ti1) * prev[c]
                value = term if value is None else value + term
            if value is not None:
                row[c] = value
        prev = tuple(row)
        rows.append(prev)
    return BmmColumn(degree=m, span=j, rows=tuple(rows))


def _first_coefficient(t: Tuple[Any, ...], o: int, j: int, m: int, field: ScalarField) -> Any:
    value = field.one
    tj1 = t[o + j + 1]
    width = tj1 - t[o + j]
    for q in range(2, m + 1):
        assert t[o + j - q + 1] != tj1, "inner multiplicity above m"
        value = value * (width / (tj1 - t[o + j - q + 1]))
    return value


def bmm_diagonal_seed(kv: KnotVector, j: int, m: Optional[int] = None,
                      field: ScalarField = FLOAT) -> List[Any]:
    """
    b^{(j,j)}_{p,p} for p = 0..m.

    Entry p is the product of the ratios (t_{j+1} - t_j) / (t_{j+q} - t_j),
    q = 2..p; entries 0 and 1 are 1.
    """
    m = resolve_degree(kv, m)
    t = span_knots(kv, j, field)
    return _diagonal_seed(t, kv.degree, j, m, field)


def bmm_column(kv: KnotVector, j: int, m: Optional[int] = None,
               field: ScalarField = FLOAT) -> BmmColumn:
    """Triangular scheme of b^{(i,j)}_{p,p}, p = 0..m, i = j-p..j."""
    m = resolve_degree(kv, m)
    t = span_knots(kv, j, field)
    seed = _diagonal_seed(t, kv.degree, j, m, field)
    return _bmm_rows(t, kv.degree, j, m, seed, field)


def first_function_row(kv: KnotVector, j: int, m: Optional[int] = None,
                       field: ScalarField = FLOAT) -> Tuple[Any, ...]:
    """
    Coefficients of N_{m,j-m} on span j.

    Only coefficient 0 is nonzero:
    (t_{j+1} - t_j)^{m-1} / prod_{q=2..m} (t_{j+1} - t_{j-q+1}), accumulated as
    a product of ratios so it stays near 1 in magnitude.
    """
    m = resolve_degree(kv, m)
    t = span_knots(kv, j, field)
    first = _first_coefficient(t, kv.degree, j, m, field)
    return (first,) + (field.zero,) * m


def convert_span_new(kv: KnotVector, j: int, m: Optional[int] = None,
                     field: ScalarField = FLOAT) -> SpanTable:
    """
    Full coefficient table of span j in O(m^2) operations.

    Args:
        kv: validated knot vector
        j: index of a non-empty span
        m: degree, defaults to the degree of ``kv``
        field: scalar field the computation runs in

    Returns:
        SpanTable with B[k, i] = b^{(i,j)}_{m,k}

    Raises:
        EmptySpanError: span j is empty or out of range
    """
    m = resolve_degree(kv, m)
    t = span_knots(kv, j, field)
    if m == 0:
        return SpanTable(degree=0, span=j, entries=(field.one,))

    o = kv.degree
    width = m + 1
    seed = _diagonal_seed(t, o, j, m, field)
    last_row = _bmm_rows(t, o, j, m, seed, field).final_row

    entries: List[Any] = [field.zero] * (width * width)
    entries[m * width:] = last_row
    entries[0] = _first_coefficient(t, o, j, m, field)

    tj, tj1 = t[o + j], t[o + j + 1]
    # column offset c = i - (j - m); interior columns c = 1..m-1
    alpha: List[Any] = [None] * width
    beta: List[Any] = [None] * width
    gamma: List[Any] = [None] * width
    for c in range(m - 1, 0, -1):
        i = j - m + c
        ti = t[o + i]
        h = tj1 - ti
        alpha[c] = (tj - ti) / h
        tmi2, ti1 = t[o + m + i + 2], t[o + i + 1]
        if tmi2 != ti1:
            w = (t[o + m + i + 1] - ti) / (tmi2 - ti1) / h
            beta[c] = (tj1 - tmi2) * w
            gamma[c] = (tmi2 - tj) * w

    for k in range(m - 1, -1, -1):
        row = k * width
        below = row + width
        for c in range(m - 1, 0, -1):
            value = alpha[c] * entries[below + c]
            if beta[c] is not None:
                value = value + beta[c] * entries[row + c + 1] + gamma[c] * entries[below + c + 1]
            entries[row + c] = value

    logger.debug("Converted span", extra={'span': j, 'degree': m, 'method': 'new', 'field': field.name})
    return SpanTable(degree=m, span=j, entries=tuple(entries))


def reconstruct(table: SpanTable, kv: KnotVector, i: int, u: Any) -> Any:
    """
    Value of N_{m,i}(u) from its Bernstein-Bezier coefficients on the table's span.

    u = t_{j+1} is accepted and yields the limit from the left, which is how
    u = t_n is evaluated on the last non-empty span.

    Raises:
        OutOfSpanError: u outside [t_j, t_{j+1}]
    """
    tj, tj1 = kv.span_bounds(table.span)
    if not tj <= u <= tj1:
        raise OutOfSpanError(f"u = {u} outside span {table.span} = [{tj}, {tj1})")
    if i not in table.indices:
        return 0
    field = field_for((tj, tj1, u))
    tj, tj1, u = field.convert(tj), field.convert(tj1), field.convert(u)
    local = (u - tj) / (tj1 - tj)
    return eval_poly(BernsteinPoly(table.degree, table.column(i)), local)


def _exact(kv: KnotVector, j: int) -> SpanTable:
    return convert_span_new(kv, j, field=RATIONAL)


def _deboor(kv: KnotVector, j: int) -> SpanTable:
    from .deboor import convert_span_deboor
    return convert_span_deboor(kv, j)


CONVERTERS: Dict[str, Callable[[KnotVector, int], SpanTable]] = {
    'new': convert_span_new,
    'deboor': _deboor,
    'exact': _exact,
}

METHODS = tuple(CONVERTERS)


def convert_span(kv: KnotVector, j: int, method: str = 'new') -> SpanTable:
    """Dispatch on method: 'new' and 'deboor' in float, 'exact' is 'new' over rationals."""
    try:
        converter = CONVERTERS[method]
    except KeyError:
        raise ConversionError(f"Unknown conversion method '{method}', expected one of {list(METHODS)}")
    return converter(kv, j)
