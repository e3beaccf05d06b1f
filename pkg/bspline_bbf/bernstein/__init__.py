"""Bernstein basis evaluation and coefficient-space identities."""

from .poly import (
    BernsteinError,
    BernsteinPoly,
    DegreeZero,
    IndexOutOfRange,
    binomial,
    degree_elevate,
    derivative_coeffs,
    eval_basis,
    eval_poly,
    multiply_by_t,
)

__all__ = [
    'BernsteinError',
    'BernsteinPoly',
    'DegreeZero',
    'IndexOutOfRange',
    'binomial',
    'degree_elevate',
    'derivative_coeffs',
    'eval_basis',
    'eval_poly',
    'multiply_by_t',
]
