"""
Bernstein basis kernels on [0, 1].

B^n_i(t) = C(n, i) t^i (1 - t)^(n - i). Polynomials are stored by their
coefficients in this basis; all operations are exact when the coefficients
and the parameter are fractions.
"""

import logging
from dataclasses import dataclass
from typing import Any, Sequence, Tuple

logger = logging.getLogger(__name__)


class BernsteinError(Exception):
    """Base exception for Bernstein kernel errors."""
    pass


class IndexOutOfRange(BernsteinError):
    """Basis index outside 0..n."""
    pass


class DegreeZero(BernsteinError):
    """Operation needs a polynomial of degree at least one."""
    pass


def binomial(n: int, i: int) -> int:
    """C(n, i) by the multiplicative recurrence; stays an exact integer."""
    if i < 0 or i > n:
        return 0
    i = min(i, n - i)
    value = 1
    for k in range(1, i + 1):
        value = value * (n - i + k) // k
    return value


@dataclass(frozen=True)
class BernsteinPoly:
    """Polynomial sum_k coefficients[k] * B^degree_k(t)."""

    degree: int
    coefficients: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if self.degree < 0 or len(self.coefficients) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coefficients)}")

    @classmethod
    def of(cls, coefficients: Sequence[Any]) -> "BernsteinPoly":
        coefficients = tuple(coefficients)
        return cls(len(coefficients) - 1, coefficients)

    def __call__(self, t: Any) -> Any:
        return eval_poly(self, t)

    def elevated_to(self, degree: int) -> "BernsteinPoly":
        poly = self
        while poly.degree < degree:
            poly = degree_elevate(poly)
        return poly

    def __add__(self, other: "BernsteinPoly") -> "BernsteinPoly":
        degree = max(self.degree, other.degree)
        a, b = self.elevated_to(degree), other.elevated_to(degree)
        return BernsteinPoly(degree, tuple(x + y for x, y in zip(a.coefficients, b.coefficients)))

    def __sub__(self, other: "BernsteinPoly") -> "BernsteinPoly":
        return self + other.scale(-1)

    def scale(self, factor: Any) -> "BernsteinPoly":
        return BernsteinPoly(self.degree, tuple(factor * c for c in self.coefficients))


def eval_basis(n: int, i: int, t: Any) -> Any:
    """
    Value of the i-th Bernstein polynomial of degree n at t.

    Raises:
        IndexOutOfRange: i outside 0..n
    """
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"basis index {i} outside 0..{n}")
    return binomial(n, i) * t ** i * (1 - t) ** (n - i)


def eval_poly(p: BernsteinPoly, t: Any) -> Any:
    """Evaluate by de Casteljau's scheme (repeated convex combinations)."""
    work = list(p.coefficients)
    s = 1 - t
    for r in range(1, p.degree + 1):
        for k in range(p.degree - r + 1):
            work[k] = s * work[k] + t * work[k + 1]
    return work[0]


def multiply_by_t(p: BernsteinPoly) -> BernsteinPoly:
    """Coefficients of t * p(t), using t B^n_k = (k+1)/(n+1) B^{n+1}_{k+1}."""
    n = p.degree
    out = [p.coefficients[0] * 0]
    out.extend(c * (k + 1) / (n + 1) for k, c in enumerate(p.coefficients))
    return BernsteinPoly(n + 1, tuple(out))


def degree_elevate(p: BernsteinPoly) -> BernsteinPoly:
    """The same polynomial written in the Bernstein basis of degree n + 1."""
    n = p.degree
    c = p.coefficients
    out = [c[0]]
    for k in range(1, n + 1):
        out.append((c[k - 1] * k + c[k] * (n + 1 - k)) / (n + 1))
    out.append(c[n])
    return BernsteinPoly(n + 1, tuple(out))


def derivative_coeffs(p: BernsteinPoly) -> BernsteinPoly:
    """
    Coefficients of d/dt p(t), degree n - 1.

    Raises:
        DegreeZero: p has degree 0
    """
    n = p.degree
    if n < 1:
        raise DegreeZero("derivative of a degree-0 Bernstein polynomial is not represented")
    c = p.coefficients
    return BernsteinPoly(n - 1, tuple(n * (c[k + 1] - c[k]) for k in range(n)))
