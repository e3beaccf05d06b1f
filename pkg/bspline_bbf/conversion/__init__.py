"""Bernstein-Bezier coefficients of B-splines over one knot span."""

from .deboor import convert_span_deboor, deboor_degree_tables
from .io import dump_table, format_value, table_from_json, table_to_csv, table_to_dict, table_to_json, table_to_text
from .span import (
    METHODS,
    bmm_column,
    bmm_diagonal_seed,
    convert_span,
    convert_span_new,
    first_function_row,
    reconstruct,
)
from .table import BmmColumn, ConversionError, EmptySpanError, OutOfSpanError, SpanTable

__all__ = [
    'METHODS',
    'BmmColumn',
    'ConversionError',
    'EmptySpanError',
    'OutOfSpanError',
    'SpanTable',
    'bmm_column',
    'bmm_diagonal_seed',
    'convert_span',
    'convert_span_deboor',
    'convert_span_new',
    'deboor_degree_tables',
    'dump_table',
    'first_function_row',
    'format_value',
    'reconstruct',
    'table_from_json',
    'table_to_csv',
    'table_to_dict',
    'table_to_json',
    'table_to_text',
]
