"""
Accuracy of the two float conversions against the exact rational table.

Knots are clamped on the right and snapped to a dyadic grid so that the float
inputs and the rational reference describe the same knot vector.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Sequence, Tuple

from ..arithmetic import RATIONAL
from ..conversion import convert_span_deboor, convert_span_new
from ..logging import log_execution_time
from .generator import GeneratorConfig, check_grid, generate_knots
from .metrics import DIGIT_CAP, correct_digits
from .report import ACCURACY, ExperimentRecord, ExperimentReport

logger = logging.getLogger(__name__)

DEFAULT_DYADIC_BITS = 24

# (digit sum of the new method, digit sum of the O(m^3) method, entry count)
TrialTotals = Tuple[float, float, int]


def accuracy_trial(m: int, n: int, seed: int, trial: int,
                   digit_cap: float = DIGIT_CAP,
                   dyadic_bits: int = DEFAULT_DYADIC_BITS) -> TrialTotals:
    """Digit sums over every entry of every non-empty span of one knot vector."""
    kv = generate_knots(GeneratorConfig(degree=m, spans=n, seed=seed, clamp_right=True,
                                        dyadic_bits=dyadic_bits, stream=trial))
    new_sum = deboor_sum = 0.0
    count = 0
    for j in kv.nonempty_spans():
        reference = convert_span_deboor(kv, j, field=RATIONAL).entries
        fast = convert_span_new(kv, j).entries
        slow = convert_span_deboor(kv, j).entries
        for exact, a, b in zip(reference, fast, slow):
            new_sum += correct_digits(a, exact, digit_cap)
            deboor_sum += correct_digits(b, exact, digit_cap)
        count += len(reference)
    return new_sum, deboor_sum, count


def _run_trial(args: Tuple[int, int, int, int, float, int]) -> TrialTotals:
    return accuracy_trial(*args)


def _reduce(results: Iterable[TrialTotals]) -> TrialTotals:
    new_sum = deboor_sum = 0.0
    count = 0
    for a, b, c in results:
        new_sum += a
        deboor_sum += b
        count += c
    return new_sum, deboor_sum, count


@log_execution_time()
def run_accuracy_experiment(ms: Sequence[int], ns: Sequence[int], trials: int, seed: int,
                            digit_cap: float = DIGIT_CAP,
                            dyadic_bits: int = DEFAULT_DYADIC_BITS,
                            jobs: int = 1) -> ExperimentReport:
    """
    Mean correct digits of convert_span_new and convert_span_deboor in float.

    Args:
        ms: degrees, each at least 1
        ns: span counts
        trials: knot vectors per (m, n) cell
        seed: base seed; trial k uses Philox substream k
        digit_cap: digits reported for exact agreement
        dyadic_bits: knot grid 2^-dyadic_bits
        jobs: worker processes; totals are summed so the result does not depend on it

    Raises:
        ExperimentConfigError: empty grid, trials < 1 or a degree below 1
    """
    check_grid(ms, ns, trials, min_degree=1)
    report = ExperimentReport(kind=ACCURACY, seed=seed)
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in ms:
            for n in ns:
                tasks: List[Tuple[int, int, int, int, float, int]] = [
                    (m, n, seed, trial, digit_cap, dyadic_bits) for trial in range(trials)]
                results = executor.map(_run_trial, tasks) if executor else map(_run_trial, tasks)
                new_sum, deboor_sum, count = _reduce(results)
                record = ExperimentRecord(
                    m=m, n=n, trials=trials, entries=count,
                    mean_correct_digits_new=new_sum / count,
                    mean_correct_digits_deboor=deboor_sum / count,
                )
                report.add(record)
                logger.info("Accuracy cell done", extra={'m': m, 'n': n, 'trials': trials,
                                                         **record.metrics()})
    finally:
        if executor is not None:
            executor.shutdown()
    return report
