"""
O(m^3) conversion by raising the degree one step at a time.

Degree p coefficients on span j follow from degree p-1 ones:

    b^{(i,j)}_{p,k} = (p-k)/p * ( (t_j - t_i)/(t_{p+i} - t_i) b^{(i,j)}_{p-1,k}
                                 + (t_{p+i+1} - t_j)/(t_{p+i+1} - t_{i+1}) b^{(i+1,j)}_{p-1,k} )
                    + k/p     * ( (t_{j+1} - t_i)/(t_{p+i} - t_i) b^{(i,j)}_{p-1,k-1}
                                 + (t_{p+i+1} - t_{j+1})/(t_{p+i+1} - t_{i+1}) b^{(i+1,j)}_{p-1,k-1} )

Terms on functions outside i = j-p+1..j and terms with coincident knots in the
denominator are dropped.
"""

import logging
from typing import Any, List, Optional

from ..arithmetic import FLOAT, ScalarField
from ..knots import KnotVector
from .span import resolve_degree, span_knots
from .table import SpanTable

logger = logging.getLogger(__name__)


def deboor_degree_tables(kv: KnotVector, j: int, field: ScalarField = FLOAT,
                         m: Optional[int] = None) -> List[SpanTable]:
    """
    Degree p tables for p = 0..m on span j; table p holds columns i = j-p..j.

    Raises:
        EmptySpanError: span j is empty or out of range
    """
    m = resolve_degree(kv, m)
    t = span_knots(kv, j, field)
    o = kv.degree
    tj, tj1 = t[o + j], t[o + j + 1]

    prev: List[Any] = [field.one]
    tables = [SpanTable(degree=0, span=j, entries=(field.one,))]
    for p in range(1, m + 1):
        left_weight = [field.ratio(p - k, p) for k in range(p + 1)]
        right_weight = [field.ratio(k, p) for k in range(p + 1)]
        width = p + 1
        entries: List[Any] = [field.zero] * (width * width)

        for c in range(width):
            i = j - p + c
            # degree p-1 neighbours: N_{p-1,i} is prev column c-1, N_{p-1,i+1} is prev column c
            use_left = c >= 1 and t[o + p + i] != t[o + i]
            use_right = c <= p - 1 and t[o + p + i + 1] != t[o + i + 1]
            if use_left:
                ti = t[o + i]
                d = t[o + p + i] - ti
                a = (tj - ti) / d
                g = (tj1 - ti) / d
            if use_right:
                tpi1 = t[o + p + i + 1]
                d = tpi1 - t[o + i + 1]
                b = (tpi1 - tj) / d
                e = (tpi1 - tj1) / d
            if not (use_left or use_right):
                continue

            for k in range(width):
                value = None
                if k < p:
                    lower = None
                    if use_left:
                        lower = prev[k * p + c - 1] * a
                    if use_right:
                        term = prev[k * p + c] * b
                        lower = term if lower is None else lower + term
                    value = left_weight[k] * lower
                if k >= 1:
                    upper = None
                    if use_left:
                        upper = prev[(k - 1) * p + c - 1] * g
                    if use_right:
                        term = prev[(k - 1) * p + c] * e
                        upper = term if upper is None else upper + term
                    term = right_weight[k] * upper
                    value = term if value is None else value + term
                entries[k * width + c] = value

        prev = entries
        tables.append(SpanTable(degree=p, span=j, entries=tuple(entries)))
    return tables


def convert_span_deboor(kv: KnotVector, j: int, m: Optional[int] = None,
                        field: ScalarField = FLOAT) -> SpanTable:
    """Same table as convert_span_new, computed in O(m^3) operations."""
    table = deboor_degree_tables(kv, j, field, m)[-1]
    logger.debug("Converted span", extra={'span': j, 'degree': table.degree, 'method': 'deboor',
                                          'field': field.name})
    return table
