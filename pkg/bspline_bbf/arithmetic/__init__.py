"""Scalar fields: machine floats, exact rationals and operation counting."""

from .fields import (
    FLOAT,
    RATIONAL,
    CountedScalar,
    FloatField,
    OperationCounter,
    RationalField,
    ScalarField,
    field_for,
    get_field,
    is_exact,
)

__all__ = [
    'FLOAT',
    'RATIONAL',
    'CountedScalar',
    'FloatField',
    'OperationCounter',
    'RationalField',
    'ScalarField',
    'field_for',
    'get_field',
    'is_exact',
]
