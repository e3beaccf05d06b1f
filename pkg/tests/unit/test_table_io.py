"""Unit tests for span table serialization."""

import json
from fractions import Fraction as F

import pytest

from bspline_bbf.arithmetic import RATIONAL
from bspline_bbf.conversion import (
    ConversionError,
    SpanTable,
    convert_span_new,
    dump_table,
    table_from_json,
    table_to_csv,
    table_to_json,
    table_to_text,
)
from tests.strategies import uniform_knots


@pytest.fixture
def quadratic_table():
    return convert_span_new(uniform_knots(2, 3), 1, field=RATIONAL)


@pytest.mark.unit
class TestTableCodecs:

    def test_json_layout(self, quadratic_table):
        assert json.loads(table_to_json(quadratic_table)) == {
            'degree': 2,
            'span': 1,
            'columns': {'-1': ['1/2', 0, 0], '0': ['1/2', 1, '1/2'], '1': [0, 0, '1/2']},
        }

    def test_json_reads_back_exactly(self, quadratic_table):
        parsed = table_from_json(table_to_json(quadratic_table))
        assert parsed == quadratic_table
        assert isinstance(parsed.get(0, -1), F)

    def test_float_entries(self):
        table = SpanTable(1, 0, (1.0, 0.25, 0.0, 0.75))
        assert json.loads(table_to_json(table))['columns'] == {'-1': [1.0, 0.0], '0': [0.25, 0.75]}

    def test_csv(self, quadratic_table):
        assert table_to_csv(quadratic_table) == "k,i=-1,i=0,i=1\n0,1/2,1/2,0\n1,0,1,0\n2,0,1/2,1/2\n"

    def test_text(self, quadratic_table):
        lines = table_to_text(quadratic_table).splitlines()
        assert lines[0] == "span 1, degree 2"
        assert lines[1].split() == ['k', 'i=-1', 'i=0', 'i=1']
        assert lines[3].split() == ['1', '0', '1', '0']
        assert len({len(line) for line in lines[1:]}) == 1

    def test_dump_table(self, quadratic_table):
        assert dump_table(quadratic_table, 'json') == table_to_json(quadratic_table) + '\n'
        with pytest.raises(ConversionError, match="Unknown table format"):
            dump_table(quadratic_table, 'xml')

    @pytest.mark.parametrize("text", [
        "{broken",
        '{"degree": 1, "span": 0}',
        '{"degree": 1, "span": 0, "columns": {"0": [1, 0], "1": [0, 1]}}',
        '{"degree": 1, "span": 0, "columns": {"-1": [1, "x"], "0": [0, 1]}}',
        '{"degree": 1, "span": 0, "columns": {"-1": [1], "0": [0, 1]}}',
        '{"degree": 1, "span": 0, "columns": {"-1": [true, 0], "0": [0, 1]}}',
    ])
    def test_rejects_malformed_json(self, text):
        with pytest.raises(ConversionError):
            table_from_json(text)
