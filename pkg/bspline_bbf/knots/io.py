"""
Knot vector file formats.

JSON:  {"degree": m, "spans": n, "knots": [t_{-m}, ..., t_{n+m}]}
Text:  first line "m n", then whitespace-separated knots (any number of lines);
       "#" starts a comment that runs to the end of the line.

Knots written as "p/q" strings (JSON) or tokens (text) are read as exact
fractions; integers stay integers; everything else is a float.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Union

from .vector import KnotValidationError, KnotVector, validate

logger = logging.getLogger(__name__)


def _parse_number(token: Any) -> Union[int, float, Fraction]:
    if isinstance(token, bool):
        raise KnotValidationError(f"boolean is not a knot value: {token}", code="ParseError")
    if isinstance(token, (int, float)):
        return token
    text = str(token).strip()
    try:
        if '/' in text:
            return Fraction(text)
        try:
            return int(text)
        except ValueError:
            return float(text)
    except (ValueError, ZeroDivisionError):
        raise KnotValidationError(f"cannot parse knot value '{token}'", code="ParseError", value=token)


def _format_number(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    return value


def parse_knots(text: str) -> KnotVector:
    """Parse knot text in either format; JSON is recognised by a leading '{'."""
    stripped = text.strip()
    if not stripped:
        raise KnotValidationError("empty knot input", code="ParseError")
    if stripped.startswith('{'):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise KnotValidationError(f"invalid JSON knot file: {e}", code="ParseError")
        return _from_mapping(data)

    lines = [line.split('#', 1)[0] for line in stripped.splitlines()]
    # Inline text may separate the header from the knots with ';'
    tokens = ' '.join(lines).replace(';', ' ').split()
    if len(tokens) < 2:
        raise KnotValidationError("text knot format needs 'm n' followed by knots", code="ParseError")
    try:
        degree, spans = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise KnotValidationError(f"invalid header '{tokens[0]} {tokens[1]}'", code="ParseError")
    return validate(degree, spans, [_parse_number(t) for t in tokens[2:]])


def _from_mapping(data: Any) -> KnotVector:
    if not isinstance(data, dict):
        raise KnotValidationError("knot JSON must be an object", code="ParseError")
    missing = [key for key in ('degree', 'spans', 'knots') if key not in data]
    if missing:
        raise KnotValidationError(f"knot JSON missing fields: {', '.join(missing)}", code="ParseError")
    if not isinstance(data['knots'], list):
        raise KnotValidationError("'knots' must be a list", code="ParseError")
    values: List[Any] = [_parse_number(v) for v in data['knots']]
    return validate(data['degree'], data['spans'], values)


def load_knots(path: Union[str, Path]) -> KnotVector:
    """Read and validate a knot file."""
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding='utf-8')
    except OSError as e:
        raise KnotValidationError(f"cannot read knot file {file_path}: {e}", code="IOError")
    kv = parse_knots(text)
    logger.info(f"Loaded knot vector from {file_path}", extra={'degree': kv.degree, 'spans': kv.spans})
    return kv


def dump_knots_json(kv: KnotVector) -> str:
    payload = {
        'degree': kv.degree,
        'spans': kv.spans,
        'knots': [_format_number(v) for v in kv.values],
    }
    return json.dumps(payload)


def dump_knots_text(kv: KnotVector) -> str:
    knots = ' '.join(str(_format_number(v)) for v in kv.values)
    return f"{kv.degree} {kv.spans}\n{knots}\n"
