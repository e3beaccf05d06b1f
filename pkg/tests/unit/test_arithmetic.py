"""Unit tests for the scalar fields."""

from fractions import Fraction

import pytest

from bspline_bbf.arithmetic import (
    FLOAT,
    RATIONAL,
    CountedScalar,
    OperationCounter,
    field_for,
    get_field,
    is_exact,
)


@pytest.mark.unit
class TestFields:

    def test_float_field_converts_fractions(self):
        assert FLOAT.convert(Fraction(1, 4)) == 0.25
        assert isinstance(FLOAT.one, float)
        assert FLOAT.ratio(1, 3) == pytest.approx(1 / 3)

    def test_rational_field_is_exact_for_floats(self):
        assert RATIONAL.convert(0.1) == Fraction(3602879701896397, 36028797018963968)
        assert RATIONAL.ratio(2, 6) == Fraction(1, 3)
        assert RATIONAL.zero == 0 and isinstance(RATIONAL.zero, Fraction)

    def test_get_field_by_name(self):
        assert get_field("float") is FLOAT
        assert get_field("rational") is RATIONAL

    def test_get_field_unknown_name(self):
        with pytest.raises(ValueError, match="Unknown scalar field"):
            get_field("decimal")

    def test_field_for_picks_rational_only_for_exact_values(self):
        assert field_for([0, Fraction(1, 2), 3]) is RATIONAL
        assert field_for([0, 0.5]) is FLOAT
        assert is_exact(7) and not is_exact(7.0)


@pytest.mark.unit
class TestOperationCounter:

    def test_counts_each_arithmetic_operation(self):
        counter = OperationCounter()
        a, b = counter.convert(3), counter.convert(4)
        result = (a + b) * a - b / a
        assert counter.count == 4
        assert float(result) == pytest.approx(21 - 4 / 3)

    def test_constants_and_comparisons_are_free(self):
        counter = OperationCounter()
        a = counter.convert(2)
        half = counter.ratio(1, 2)
        assert a > half and a != half and not a == half
        assert counter.count == 0

    def test_mixed_with_plain_numbers(self):
        counter = OperationCounter()
        a = counter.convert(5)
        value = 2 * a + 1
        assert isinstance(value, CountedScalar)
        assert value.value == 11
        assert counter.count == 2

    def test_reset(self):
        counter = OperationCounter()
        counter.convert(1) + counter.convert(2)
        counter.reset()
        assert counter.count == 0

    def test_rational_field_unwraps_counted_values(self):
        counter = OperationCounter()
        assert RATIONAL.convert(counter.convert(0.5)) == Fraction(1, 2)
