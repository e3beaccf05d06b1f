"""Property-based tests for the structure of span tables.

**Property: every span table describes a partition of unity**
Rows sum to one, entries are nonnegative, the boundary columns are sparse,
and each column reproduces its B-spline on the span.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bspline_bbf.arithmetic import RATIONAL
from bspline_bbf.conversion import convert_span_new, first_function_row, reconstruct
from bspline_bbf.oracle import bspline_value_definition, deboor_cox_eval
from tests.strategies import float_knot_vectors, rational_knot_vectors, span_points


@pytest.mark.property
class TestTableStructure:
    """Property tests for row sums, signs and sparsity."""

    @given(kv=rational_knot_vectors(max_degree=6, max_spans=5))
    @settings(max_examples=60, deadline=None)
    def test_rows_sum_to_one_exactly(self, kv):
        for j in kv.nonempty_spans():
            table = convert_span_new(kv, j, field=RATIONAL)
            for k in range(table.degree + 1):
                assert sum(table.row(k)) == 1

    @given(kv=float_knot_vectors(max_degree=8, max_spans=5))
    @settings(max_examples=40, deadline=None)
    def test_rows_sum_to_one_in_float(self, kv):
        for j in kv.nonempty_spans():
            table = convert_span_new(kv, j)
            for k in range(table.degree + 1):
                assert abs(sum(table.row(k)) - 1) < 1e-12

    @given(kv=rational_knot_vectors(max_degree=6, max_spans=5))
    @settings(max_examples=60, deadline=None)
    def test_entries_nonnegative(self, kv):
        for j in kv.nonempty_spans():
            assert all(b >= 0 for b in convert_span_new(kv, j, field=RATIONAL).entries)

    @given(kv=rational_knot_vectors(max_degree=6, max_spans=5))
    @settings(max_examples=60, deadline=None)
    def test_boundary_columns_are_sparse(self, kv):
        """N_{m,j-m} has only its first coefficient, N_{m,j} only its last."""
        m = kv.degree
        for j in kv.nonempty_spans():
            table = convert_span_new(kv, j, field=RATIONAL)
            left, right = table.column(j - m), table.column(j)
            assert all(b == 0 for b in left[1:])
            assert all(b == 0 for b in right[:-1])
            assert left[0] > 0 and right[-1] > 0
            assert left == first_function_row(kv, j, field=RATIONAL)


@pytest.mark.property
class TestReconstruction:
    """Property tests for reconstruction against the reference evaluators."""

    @given(kv=rational_knot_vectors(max_degree=5, max_spans=4), data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_matches_deboor_cox_exactly(self, kv, data):
        j = data.draw(st.sampled_from(kv.nonempty_spans()))
        u = data.draw(span_points(kv, j))
        table = convert_span_new(kv, j, field=RATIONAL)
        for i in range(-kv.degree, kv.spans):
            assert reconstruct(table, kv, i, u) == deboor_cox_eval(kv, i, u)

    @given(kv=rational_knot_vectors(max_degree=4, max_spans=4), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_definition_exactly(self, kv, data):
        j = data.draw(st.sampled_from(kv.nonempty_spans()))
        u = data.draw(span_points(kv, j))
        table = convert_span_new(kv, j, field=RATIONAL)
        for i in table.indices:
            assert reconstruct(table, kv, i, u) == bspline_value_definition(kv, i, u)

    @given(kv=rational_knot_vectors(max_degree=5, max_spans=4), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_span_ends(self, kv, data):
        """At t_j the value is the right limit; at t_{j+1} it is the left limit."""
        j = data.draw(st.sampled_from(kv.nonempty_spans()))
        table = convert_span_new(kv, j, field=RATIONAL)
        for i in table.indices:
            assert reconstruct(table, kv, i, kv.knot(j)) == deboor_cox_eval(kv, i, kv.knot(j))
            if j == kv.nonempty_spans()[-1]:
                assert reconstruct(table, kv, i, kv.knot(j + 1)) == deboor_cox_eval(kv, i, kv.knot(j + 1))

    @pytest.mark.slow
    @given(kv=float_knot_vectors(max_degree=10, max_spans=4))
    @settings(max_examples=200, deadline=None)
    def test_float_reconstruction_on_span_grid(self, kv):
        """100 points per span, within 1e-12 of de Boor-Cox relative to the unit sum of the basis."""
        for j in kv.nonempty_spans():
            table = convert_span_new(kv, j)
            tj, tj1 = kv.span_bounds(j)
            for step in range(100):
                u = tj + (tj1 - tj) * (step + 0.5) / 100
                for i in table.indices:
                    expected = deboor_cox_eval(kv, i, u)
                    assert abs(reconstruct(table, kv, i, u) - expected) <= 1e-12 * max(1.0, abs(expected))
