"""Property-based tests for the arithmetic cost of the conversions.

**Property: the new method is O(m^2) and the degree-raising method O(m^3) per span**
On integer knots with no repeats every branch is taken, so the counts are
exact closed forms; repeated knots only skip work.
"""

import pytest
from hypothesis import given, settings

from bspline_bbf.arithmetic import OperationCounter
from bspline_bbf.conversion import convert_span_deboor, convert_span_new
from tests.strategies import rational_knot_vectors, uniform_knots


def new_method_ops(m):
    """Seed and first coefficient, triangular scheme, sweep coefficients, sweep."""
    return 2 * (1 + 3 * (m - 1)) + 9 * m * (m + 1) // 2 - 5 * m + 11 * (m - 1) + 5 * m * (m - 1)


def deboor_method_ops(m):
    return sum(9 * p * p + 10 * p - 1 for p in range(1, m + 1))


def count_ops(method, kv, j):
    counter = OperationCounter()
    method(kv, j, field=counter)
    return counter.count


@pytest.mark.property
class TestOperationCounts:
    """Property tests for operation counts."""

    @pytest.mark.parametrize("m, expected", [(10, 1050), (20, 4015), (25, 6210), (50, 24310)])
    def test_new_method_closed_form(self, m, expected):
        assert new_method_ops(m) == expected
        assert count_ops(convert_span_new, uniform_knots(m, 1), 0) == expected

    @pytest.mark.parametrize("m, expected", [(10, 4005), (20, 27910)])
    def test_deboor_method_closed_form(self, m, expected):
        assert deboor_method_ops(m) == expected
        assert count_ops(convert_span_deboor, uniform_knots(m, 1), 0) == expected

    @pytest.mark.parametrize("m", [1, 2, 3, 7])
    def test_counts_do_not_depend_on_span(self, m):
        kv = uniform_knots(m, 4)
        assert {count_ops(convert_span_new, kv, j) for j in range(4)} == {new_method_ops(m)}

    @pytest.mark.parametrize("low, high", [(10, 20), (20, 40), (25, 50)])
    def test_doubling_the_degree(self, low, high):
        """Doubling m roughly quadruples the new count and multiplies the other by about eight."""
        new_ratio = count_ops(convert_span_new, uniform_knots(high, 1), 0) / \
            count_ops(convert_span_new, uniform_knots(low, 1), 0)
        deboor_ratio = count_ops(convert_span_deboor, uniform_knots(high, 1), 0) / \
            count_ops(convert_span_deboor, uniform_knots(low, 1), 0)
        assert 3.5 <= new_ratio <= 4.5
        assert 6.5 <= deboor_ratio <= 9.5

    @given(kv=rational_knot_vectors(max_degree=8, max_spans=5))
    @settings(max_examples=50, deadline=None)
    def test_repeated_knots_never_cost_more(self, kv):
        m = kv.degree
        for j in kv.nonempty_spans():
            assert count_ops(convert_span_new, kv, j) <= new_method_ops(m)
            assert count_ops(convert_span_deboor, kv, j) <= deboor_method_ops(m)

    def test_new_method_cheaper_from_degree_two(self):
        for m in range(2, 16):
            assert new_method_ops(m) < deboor_method_ops(m)
