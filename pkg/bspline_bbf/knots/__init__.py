"""Knot vectors: validation, span location and file formats."""

from .io import dump_knots_json, dump_knots_text, load_knots, parse_knots
from .vector import (
    DegenerateDomain,
    InnerMultiplicityTooHigh,
    InvalidShape,
    KnotValidationError,
    KnotVector,
    LengthMismatch,
    NotNondecreasing,
    OutOfDomain,
    find_span,
    multiplicity,
    validate,
)

__all__ = [
    'DegenerateDomain',
    'InnerMultiplicityTooHigh',
    'InvalidShape',
    'KnotValidationError',
    'KnotVector',
    'LengthMismatch',
    'NotNondecreasing',
    'OutOfDomain',
    'dump_knots_json',
    'dump_knots_text',
    'find_span',
    'load_knots',
    'multiplicity',
    'parse_knots',
    'validate',
]
