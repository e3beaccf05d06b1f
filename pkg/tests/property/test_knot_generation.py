"""Property-based tests for the random knot generator.

**Property: generated knot vectors are valid and reproducible**
Every seed and stream yields a knot vector that passes validation, the same
inputs always yield the same knots, and the requested shape options hold.
"""

import statistics

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bspline_bbf.experiments import GeneratorConfig, generate_knots, generate_values
from bspline_bbf.knots import multiplicity


@st.composite
def generator_configs(draw, clamp_right=None, dyadic=None):
    clamp = draw(st.booleans()) if clamp_right is None else clamp_right
    bits = draw(st.sampled_from([None, 12, 24])) if dyadic is None else dyadic
    return GeneratorConfig(
        degree=draw(st.integers(min_value=1, max_value=8)),
        spans=draw(st.integers(min_value=1, max_value=30)),
        seed=draw(st.integers(min_value=0, max_value=2 ** 32 - 1)),
        clamp_right=clamp,
        dyadic_bits=bits,
        stream=draw(st.integers(min_value=0, max_value=50)),
    )


@pytest.mark.property
class TestKnotGeneration:
    """Property tests for generate_knots."""

    @given(cfg=generator_configs())
    @settings(max_examples=100, deadline=None)
    def test_always_valid(self, cfg):
        kv = generate_knots(cfg)
        assert kv.degree == cfg.degree and kv.spans == cfg.spans
        assert kv.nonempty_spans()

    @given(cfg=generator_configs())
    @settings(max_examples=50, deadline=None)
    def test_deterministic(self, cfg):
        assert generate_values(cfg) == generate_values(cfg)

    @given(cfg=generator_configs(clamp_right=True))
    @settings(max_examples=50, deadline=None)
    def test_clamped_right_end(self, cfg):
        kv = generate_knots(cfg)
        m, n = cfg.degree, cfg.spans
        assert multiplicity(kv, kv.knot(n)) == m + 1
        assert kv.knot(n - 1) < kv.knot(n)

    @given(cfg=generator_configs(dyadic=20))
    @settings(max_examples=50, deadline=None)
    def test_dyadic_grid(self, cfg):
        assert all((v * 2 ** 20).is_integer() for v in generate_values(cfg))

    @given(seed=st.integers(min_value=0, max_value=10 ** 6), spans=st.integers(min_value=1, max_value=30))
    @settings(max_examples=50, deadline=None)
    def test_degree_one_has_simple_knots(self, seed, spans):
        values = generate_values(GeneratorConfig(degree=1, spans=spans, seed=seed))
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.slow
    def test_mean_gap(self):
        gaps = []
        for stream in range(200):
            values = generate_values(GeneratorConfig(degree=5, spans=50, seed=2024, stream=stream))
            gaps.extend(b - a for a, b in zip(values, values[1:]) if b != a)
        assert statistics.mean(gaps) == pytest.approx(0.25, abs=0.02)
