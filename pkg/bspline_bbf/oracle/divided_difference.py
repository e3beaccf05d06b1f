"""
B-spline values from the divided-difference definition.

N_{m,i}(u) = (t_{i+m+1} - t_i) [t_i, ..., t_{i+m+1}] (t - u)^m_+

The divided difference acts on t. Repeated nodes use derivative values of the
truncated power. When every input is an int or a Fraction the whole
computation is exact; this module is ground truth, not a fast path.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any, List, Optional, Sequence

from ..arithmetic import field_for
from ..knots import KnotVector

logger = logging.getLogger(__name__)


class OracleError(Exception):
    """Base exception for reference computations."""
    pass


class UnsupportedConfluency(OracleError):
    """A repeated node at u needs a derivative the truncated power does not have."""
    pass


@dataclass(frozen=True)
class BSplineValue:
    """Value of N_{m,i}(u), optionally with its first derivative."""

    value: Any
    derivative: Optional[Any] = None


def truncated_power(x: Any, c: Any, m: int) -> Any:
    """(x - c)^m for x >= c, else 0; for m = 0 and x >= c the value is 1."""
    if m < 0:
        raise ValueError(f"truncated power needs m >= 0, got {m}")
    if x < c:
        return 0 * x
    if m == 0:
        return 1 + 0 * x
    return (x - c) ** m


def _scaled_derivative(x: Any, u: Any, m: int, r: int) -> Any:
    """
    r-th derivative in x of (x - u)^m_+ divided by r!.

    At the kink x = u the m-th derivative jumps; the value taken there is the
    limit from u slightly larger than x, so the resulting B-splines are
    continuous from the right like the degree-0 indicator [t_i <= u < t_{i+1}).
    """
    if r < m:
        if x < u:
            return 0 * x
        return comb(m, r) * (x - u) ** (m - r)
    if r == m:
        return 1 + 0 * x if x > u else 0 * x
    if x == u:
        raise UnsupportedConfluency(
            f"{r + 1}-fold node at u = {u} needs derivative order {r} > m = {m}")
    return 0 * x


def divided_difference_truncated_power(nodes: Sequence[Any], u: Any, m: int) -> Any:
    """
    [nodes](t - u)^m_+ by the recursive divided-difference rule.

    Args:
        nodes: nondecreasing nodes x_0 <= ... <= x_r
        u: shift of the truncated power
        m: degree of the truncated power

    Raises:
        ValueError: nodes not sorted or empty
        UnsupportedConfluency: a block of more than m + 1 equal nodes sits at u
    """
    if not nodes:
        raise ValueError("divided difference needs at least one node")
    for a, b in zip(nodes, nodes[1:]):
        if not a <= b:
            raise ValueError("divided difference nodes must be nondecreasing")

    # table[i] holds [x_i, ..., x_{i+level}]
    table: List[Any] = [_scaled_derivative(x, u, m, 0) for x in nodes]
    order = len(nodes) - 1
    for level in range(1, order + 1):
        for i in range(order - level + 1):
            left, right = nodes[i], nodes[i + level]
            if left == right:
                table[i] = _scaled_derivative(left, u, m, level)
            else:
                table[i] = (table[i + 1] - table[i]) / (right - left)
    return table[0]


def bspline_value_definition(kv: KnotVector, i: int, u: Any) -> Any:
    """
    N_{m,i}(u) from the divided-difference definition.

    Exact when knots and u are ints/Fractions.
    """
    m = kv.degree
    if not -m <= i < kv.spans:
        raise IndexError(f"B-spline index {i} outside [-{m}, {kv.spans - 1}]")
    field = field_for(kv.values + (u,))
    u = field.convert(u)
    nodes = [field.convert(kv.knot(q)) for q in range(i, i + m + 2)]
    width = nodes[-1] - nodes[0]
    if nodes[-1] == nodes[0]:
        return field.zero
    return width * divided_difference_truncated_power(nodes, u, m)
