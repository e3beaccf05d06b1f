"""
Random knot vectors for the accuracy and timing experiments.

The first knot is uniform in [-10, 10]; each further distinct value adds a
gap uniform in (0, 0.5) and is repeated a uniform number of times in 1..m.
Values fill the slots t_{-m}, ..., t_{n+m} in order and the last run is cut
to fit.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..knots import KnotVector, validate

logger = logging.getLogger(__name__)


class ExperimentConfigError(ValueError):
    """Experiment grid or generator parameters are unusable."""
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Parameters of one random knot vector.

    ``stream`` selects an independent Philox substream so that trial k of a
    run is reproducible on its own. With ``dyadic_bits`` set, the first knot
    and every gap are multiples of 2^-dyadic_bits (gaps at least one step),
    so every knot is exactly representable and its float value equals its
    rational value.
    """

    degree: int
    spans: int
    seed: int
    first_knot_range: Tuple[float, float] = (-10.0, 10.0)
    gap_range: Tuple[float, float] = (0.0, 0.5)
    clamp_right: bool = False
    dyadic_bits: Optional[int] = None
    stream: int = 0

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ExperimentConfigError(f"degree must be nonnegative, got {self.degree}")
        if self.spans < 1:
            raise ExperimentConfigError(f"span count must be positive, got {self.spans}")
        low, high = self.gap_range
        if not 0 <= low < high:
            raise ExperimentConfigError(f"invalid gap range {self.gap_range}")
        if self.first_knot_range[0] > self.first_knot_range[1]:
            raise ExperimentConfigError(f"invalid first knot range {self.first_knot_range}")
        if self.dyadic_bits is not None and not 1 <= self.dyadic_bits <= 50:
            raise ExperimentConfigError(f"dyadic_bits must be in 1..50, got {self.dyadic_bits}")
        if self.stream < 0:
            raise ExperimentConfigError(f"stream must be nonnegative, got {self.stream}")


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator; substreams are disjoint jumps of the same key."""
    bit_generator = np.random.Philox(seed)
    if stream:
        bit_generator = bit_generator.jumped(stream)
    return np.random.Generator(bit_generator)


class _Sampler:
    def __init__(self, cfg: GeneratorConfig):
        self.cfg = cfg
        self.rng = make_rng(cfg.seed, cfg.stream)
        self.step = 2.0 ** -cfg.dyadic_bits if cfg.dyadic_bits is not None else None

    def first(self) -> float:
        value = float(self.rng.uniform(*self.cfg.first_knot_range))
        if self.step is not None:
            value = round(value / self.step) * self.step
        return value

    def gap(self) -> float:
        low, high = self.cfg.gap_range
        value = 0.0
        while value <= low:
            value = float(self.rng.uniform(low, high))
        if self.step is not None:
            value = max(self.step, round(value / self.step) * self.step)
        return value

    def multiplicity(self) -> int:
        return int(self.rng.integers(1, max(self.cfg.degree, 1), endpoint=True))


def generate_values(cfg: GeneratorConfig) -> List[float]:
    """
    Raw knot values t_{-m}, ..., t_{n+m} for ``cfg``.

    Slot t_n always starts a new distinct value when the right end is clamped
    or when the running value still equals t_0, so the result keeps
    t_0 < t_n and inner multiplicities <= m.
    """
    m, n = cfg.degree, cfg.spans
    total = n + 2 * m + 1
    t0_slot, tn_slot = m, n + m
    sampler = _Sampler(cfg)

    values: List[float] = []
    current = sampler.first()
    remaining = sampler.multiplicity()
    while len(values) < total:
        slot = len(values)
        fresh = remaining == 0
        if slot == tn_slot and (cfg.clamp_right or current == values[t0_slot]):
            fresh = True
        if fresh:
            current = current + sampler.gap()
            remaining = sampler.multiplicity()
        values.append(current)
        remaining -= 1

    if cfg.clamp_right:
        values[tn_slot:] = [values[tn_slot]] * (m + 1)
    return values


def generate_knots(cfg: GeneratorConfig) -> KnotVector:
    """A validated random knot vector; deterministic for fixed seed and stream."""
    kv = validate(cfg.degree, cfg.spans, generate_values(cfg))
    logger.debug("Generated knot vector", extra={'degree': cfg.degree, 'spans': cfg.spans,
                                                  'seed': cfg.seed, 'stream': cfg.stream})
    return kv


def check_grid(ms: Sequence[int], ns: Sequence[int], trials: int, min_degree: int = 0) -> None:
    """
    Raises:
        ExperimentConfigError: empty grid, trials < 1, degree below
            ``min_degree`` or span count below 1
    """
    if not ms or not ns:
        raise ExperimentConfigError("experiment grid needs at least one degree and one span count")
    if trials < 1:
        raise ExperimentConfigError(f"trials must be at least 1, got {trials}")
    low = [m for m in ms if m < min_degree]
    if low:
        raise ExperimentConfigError(f"degrees {low} below minimum {min_degree}")
    bad = [n for n in ns if n < 1]
    if bad:
        raise ExperimentConfigError(f"span counts {bad} must be positive")
