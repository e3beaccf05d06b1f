"""
Containers for adjusted Bernstein-Bezier coefficients over one knot span.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


class ConversionError(Exception):
    """Base exception for span conversion errors."""
    pass


class EmptySpanError(ConversionError):
    """The requested span [t_j, t_{j+1}) is empty or out of range."""
    pass


class OutOfSpanError(ConversionError):
    """A parameter or function index lies outside the converted span."""
    pass


@dataclass(frozen=True)
class SpanTable:
    """
    Coefficients B[k, i] = b^{(i,j)}_{p,k} for k = 0..p and i = j-p..j.

    ``entries`` is one flat k-major buffer of length (p+1)^2: entry (k, i) lives
    at k * (p + 1) + (i - (j - p)).
    """

    degree: int
    span: int
    entries: Tuple[Any, ...]

    def __post_init__(self) -> None:
        size = (self.degree + 1) ** 2
        if len(self.entries) != size:
            raise ValueError(f"degree {self.degree} table needs {size} entries, got {len(self.entries)}")

    @property
    def first_index(self) -> int:
        return self.span - self.degree

    @property
    def indices(self) -> range:
        """Function indices i = j-p..j covered by the table."""
        return range(self.first_index, self.span + 1)

    def get(self, k: int, i: int) -> Any:
        if not 0 <= k <= self.degree:
            raise IndexError(f"Bernstein index {k} outside 0..{self.degree}")
        if i not in self.indices:
            return 0
        return self.entries[k * (self.degree + 1) + i - self.first_index]

    def column(self, i: int) -> Tuple[Any, ...]:
        """The m+1 coefficients of N_{p,i} on this span; zeros outside the support."""
        if i not in self.indices:
            return (0,) * (self.degree + 1)
        c = i - self.first_index
        width = self.degree + 1
        return tuple(self.entries[k * width + c] for k in range(width))

    def row(self, k: int) -> Tuple[Any, ...]:
        width = self.degree + 1
        return tuple(self.entries[k * width:(k + 1) * width])

    def columns(self) -> Dict[int, Tuple[Any, ...]]:
        return {i: self.column(i) for i in self.indices}

    def to_array(self) -> np.ndarray:
        """Float matrix with rows k and columns i = j-p..j."""
        width = self.degree + 1
        return np.array([float(v) for v in self.entries], dtype=float).reshape(width, width)

    def max_abs_difference(self, other: "SpanTable") -> float:
        if (self.degree, self.span) != (other.degree, other.span):
            raise ValueError("tables cover different spans or degrees")
        return float(np.max(np.abs(self.to_array() - other.to_array())))

    @classmethod
    def from_columns(cls, degree: int, span: int, columns: Sequence[Sequence[Any]]) -> "SpanTable":
        """Build from columns ordered i = j-p..j, each listing k = 0..p."""
        width = degree + 1
        if len(columns) != width or any(len(col) != width for col in columns):
            raise ValueError(f"degree {degree} table needs {width} columns of {width} values")
        entries: List[Any] = [columns[c][k] for k in range(width) for c in range(width)]
        return cls(degree, span, tuple(entries))


@dataclass(frozen=True)
class BmmColumn:
    """
    Triangular scheme of the last coefficients b^{(i,j)}_{p,p}, p = 0..m.

    rows[p][c] holds i = j - p + c; indices i < j - p are zero and not stored.
    """

    degree: int
    span: int
    rows: Tuple[Tuple[Any, ...], ...]

    def value(self, p: int, i: int) -> Any:
        if i < self.span - p or i > self.span:
            return 0
        return self.rows[p][i - (self.span - p)]

    @property
    def final_row(self) -> Tuple[Any, ...]:
        """b^{(i,j)}_{m,m} for i = j-m..j, the last row of the span table."""
        return self.rows[self.degree]
