"""
Wall-clock comparison of the O(m^2) and O(m^3) float conversions.

Both methods convert every non-empty span of the same unclamped knot vectors.
Each cell is timed ``repetitions`` times after an optional warm-up pass and
the median total is reported. Runs are single-threaded.
"""

import logging
import time
from typing import Callable, List, Sequence, Tuple

import numpy as np

from ..conversion import SpanTable, convert_span_deboor, convert_span_new
from ..knots import KnotVector
from ..logging import log_execution_time, log_system_info
from .generator import ExperimentConfigError, GeneratorConfig, check_grid, generate_knots
from .report import TIMING, ExperimentRecord, ExperimentReport

logger = logging.getLogger(__name__)

Workload = List[Tuple[KnotVector, List[int]]]


def build_workload(m: int, n: int, trials: int, seed: int) -> Workload:
    workload = []
    for trial in range(trials):
        kv = generate_knots(GeneratorConfig(degree=m, spans=n, seed=seed, clamp_right=False,
                                            stream=trial))
        workload.append((kv, kv.nonempty_spans()))
    return workload


def time_method(method: Callable[[KnotVector, int], SpanTable], workload: Workload) -> float:
    """Seconds to convert every span of the workload once."""
    start = time.perf_counter()
    for kv, spans in workload:
        for j in spans:
            method(kv, j)
    return time.perf_counter() - start


@log_execution_time()
def run_timing_experiment(ms: Sequence[int], ns: Sequence[int], trials: int, seed: int,
                          repetitions: int = 5, warmup: bool = True) -> ExperimentReport:
    """
    Median totals of convert_span_new and convert_span_deboor per (m, n).

    Raises:
        ExperimentConfigError: empty grid, trials < 1, a degree below 1 or repetitions < 1
    """
    check_grid(ms, ns, trials, min_degree=1)
    if repetitions < 1:
        raise ExperimentConfigError(f"repetitions must be at least 1, got {repetitions}")

    info = log_system_info()
    report = ExperimentReport(kind=TIMING, seed=seed, system=info.to_dict())
    for m in ms:
        for n in ns:
            workload = build_workload(m, n, trials, seed)
            if warmup:
                time_method(convert_span_new, workload)
                time_method(convert_span_deboor, workload)
            new_times, deboor_times = [], []
            for _ in range(repetitions):
                new_times.append(time_method(convert_span_new, workload))
                deboor_times.append(time_method(convert_span_deboor, workload))
            record = ExperimentRecord(
                m=m, n=n, trials=trials,
                time_new_seconds=float(np.median(new_times)),
                time_deboor_seconds=float(np.median(deboor_times)),
            )
            report.add(record)
            logger.info("Timing cell done", extra={'m': m, 'n': n, 'trials': trials,
                                                   **record.metrics()})
    return report
