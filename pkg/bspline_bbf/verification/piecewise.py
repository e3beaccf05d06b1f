"""
Piecewise polynomials stored as one Bernstein polynomial per non-empty span.

Piece j is written in the local parameter s = (u - t_j) / (t_{j+1} - t_j).
Together with the exact field this turns identities between B-splines and
their derivatives into equalities of coefficient vectors.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..arithmetic import ScalarField
from ..bernstein import BernsteinPoly, degree_elevate, derivative_coeffs, multiply_by_t
from ..conversion import deboor_degree_tables, SpanTable
from ..knots import KnotVector, find_span

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PiecewisePolynomial:
    kv: KnotVector
    field: ScalarField
    pieces: Dict[int, BernsteinPoly]

    @classmethod
    def zero(cls, kv: KnotVector, field: ScalarField, degree: int = 0) -> "PiecewisePolynomial":
        piece = BernsteinPoly(degree, (field.zero,) * (degree + 1))
        return cls(kv, field, {j: piece for j in kv.nonempty_spans()})

    @property
    def degree(self) -> int:
        return max(piece.degree for piece in self.pieces.values())

    def _width(self, j: int) -> Any:
        return self.field.convert(self.kv.knot(j + 1)) - self.field.convert(self.kv.knot(j))

    def _combine(self, other: "PiecewisePolynomial", sign: int) -> "PiecewisePolynomial":
        if other.kv != self.kv:
            raise ValueError("piecewise polynomials live on different knot vectors")
        pieces = {}
        for j, piece in self.pieces.items():
            pieces[j] = piece + other.pieces[j] if sign > 0 else piece - other.pieces[j]
        return PiecewisePolynomial(self.kv, self.field, pieces)

    def __add__(self, other: "PiecewisePolynomial") -> "PiecewisePolynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "PiecewisePolynomial") -> "PiecewisePolynomial":
        return self._combine(other, -1)

    def scale(self, factor: Any) -> "PiecewisePolynomial":
        factor = self.field.convert(factor)
        return PiecewisePolynomial(self.kv, self.field,
                                   {j: piece.scale(factor) for j, piece in self.pieces.items()})

    def times_affine(self, alpha: Any, beta: Any) -> "PiecewisePolynomial":
        """(alpha + beta * u) * p, one degree higher."""
        alpha, beta = self.field.convert(alpha), self.field.convert(beta)
        pieces = {}
        for j, piece in self.pieces.items():
            # alpha + beta u = (alpha + beta t_j) + beta h s on span j
            constant = alpha + beta * self.field.convert(self.kv.knot(j))
            slope = beta * self._width(j)
            pieces[j] = degree_elevate(piece).scale(constant) + multiply_by_t(piece).scale(slope)
        return PiecewisePolynomial(self.kv, self.field, pieces)

    def derivative(self) -> "PiecewisePolynomial":
        """d/du, piece by piece; constant pieces give a zero constant."""
        pieces = {}
        for j, piece in self.pieces.items():
            if piece.degree == 0:
                pieces[j] = BernsteinPoly(0, (self.field.zero,))
            else:
                pieces[j] = derivative_coeffs(piece).scale(1 / self._width(j))
        return PiecewisePolynomial(self.kv, self.field, pieces)

    def __call__(self, u: Any) -> Any:
        j = find_span(self.kv, u)
        t_j = self.field.convert(self.kv.knot(j))
        return self.pieces[j]((self.field.convert(u) - t_j) / self._width(j))

    def max_deviation(self, other: "PiecewisePolynomial") -> Any:
        """Largest coefficient difference after raising both to a common degree."""
        worst = self.field.zero
        for j, piece in self.pieces.items():
            diff = piece - other.pieces[j]
            for c in diff.coefficients:
                worst = max(worst, abs(c))
        return worst

    def equals(self, other: "PiecewisePolynomial") -> bool:
        return self.max_deviation(other) == 0


class BasisCatalog:
    """
    B-splines N_{p,i}, p <= m, as piecewise polynomials.

    Degree tables are built once per span with the O(m^3) scheme and cached.
    """

    def __init__(self, kv: KnotVector, field: ScalarField):
        self.kv = kv
        self.field = field
        self._tables: Dict[int, List[SpanTable]] = {}

    def tables(self, j: int) -> List[SpanTable]:
        if j not in self._tables:
            self._tables[j] = deboor_degree_tables(self.kv, j, self.field)
        return self._tables[j]

    def bspline(self, degree: int, i: int) -> PiecewisePolynomial:
        """N_{degree,i}; degree -1 and indices outside -degree..n-1 give zero."""
        if degree < 0:
            return PiecewisePolynomial.zero(self.kv, self.field)
        pieces = {}
        for j in self.kv.nonempty_spans():
            column = self.tables(j)[degree].column(i)
            pieces[j] = BernsteinPoly(degree, tuple(self.field.convert(c) for c in column))
        return PiecewisePolynomial(self.kv, self.field, pieces)


def bspline_piecewise(kv: KnotVector, degree: int, i: int, field: ScalarField,
                      catalog: Optional[BasisCatalog] = None) -> PiecewisePolynomial:
    """N_{degree,i} on every non-empty span of ``kv``."""
    catalog = catalog or BasisCatalog(kv, field)
    return catalog.bspline(degree, i)
