"""
SpanTable serialization.

JSON:  {"degree": m, "span": j, "columns": {"<i>": [b_0, ..., b_m], ...}}
CSV:   header "k,i=<j-m>,...,i=<j>", one row per Bernstein index k
Text:  aligned columns for terminals

Exact entries are written as "p/q" strings (integers stay integers) so the
output is independent of float formatting.
"""

import csv
import io
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List

from .table import ConversionError, SpanTable

logger = logging.getLogger(__name__)


def format_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, int):
        return value
    return float(value)


def _parse_value(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConversionError(f"invalid table entry '{value}'")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConversionError(f"invalid table entry {value!r}")
    return value


def table_to_dict(table: SpanTable) -> Dict[str, Any]:
    return {
        'degree': table.degree,
        'span': table.span,
        'columns': {str(i): [format_value(v) for v in table.column(i)] for i in table.indices},
    }


def table_to_json(table: SpanTable) -> str:
    return json.dumps(table_to_dict(table))


def table_from_json(text: str) -> SpanTable:
    """
    Parse the JSON produced by ``table_to_json``.

    Raises:
        ConversionError: malformed document or inconsistent shape
    """
    try:
        data = json.loads(text)
        degree, span, columns = int(data['degree']), int(data['span']), data['columns']
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ConversionError(f"invalid span table JSON: {e}")
    expected = [str(i) for i in range(span - degree, span + 1)]
    if not isinstance(columns, dict) or sorted(columns, key=int) != expected:
        raise ConversionError(f"span table JSON must list columns {expected}")
    ordered: List[List[Any]] = [[_parse_value(v) for v in columns[key]] for key in expected]
    try:
        return SpanTable.from_columns(degree, span, ordered)
    except ValueError as e:
        raise ConversionError(str(e))


def table_to_csv(table: SpanTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['k'] + [f"i={i}" for i in table.indices])
    for k in range(table.degree + 1):
        writer.writerow([k] + [format_value(v) for v in table.row(k)])
    return buffer.getvalue()


def table_to_text(table: SpanTable) -> str:
    header = ['k'] + [f"i={i}" for i in table.indices]
    rows = [[str(k)] + [str(format_value(v)) for v in table.row(k)] for k in range(table.degree + 1)]
    widths = [max(len(line[c]) for line in [header] + rows) for c in range(len(header))]
    lines = [f"span {table.span}, degree {table.degree}"]
    for line in [header] + rows:
        lines.append('  '.join(cell.rjust(widths[c]) for c, cell in enumerate(line)))
    return '\n'.join(lines) + '\n'


FORMATTERS = {
    'json': lambda table: table_to_json(table) + '\n',
    'csv': table_to_csv,
    'text': table_to_text,
}


def dump_table(table: SpanTable, fmt: str) -> str:
    try:
        return FORMATTERS[fmt](table)
    except KeyError:
        raise ConversionError(f"Unknown table format '{fmt}', expected one of {sorted(FORMATTERS)}")
