"""Random knot generation, accuracy and timing experiments."""

from .accuracy import accuracy_trial, run_accuracy_experiment
from .generator import (
    ExperimentConfigError,
    GeneratorConfig,
    check_grid,
    generate_knots,
    generate_values,
    make_rng,
)
from .metrics import DIGIT_CAP, correct_digits
from .report import ACCURACY, TIMING, ExperimentRecord, ExperimentReport
from .timing import build_workload, run_timing_experiment, time_method

__all__ = [
    'ACCURACY',
    'DIGIT_CAP',
    'TIMING',
    'ExperimentConfigError',
    'ExperimentRecord',
    'ExperimentReport',
    'GeneratorConfig',
    'accuracy_trial',
    'build_workload',
    'check_grid',
    'correct_digits',
    'generate_knots',
    'generate_values',
    'make_rng',
    'run_accuracy_experiment',
    'run_timing_experiment',
    'time_method',
]
