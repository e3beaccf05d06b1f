"""
Experiment results per (m, n) cell.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)

ACCURACY = 'accuracy'
TIMING = 'timing'


@dataclass
class ExperimentRecord:
    """One grid cell; accuracy runs fill the digit means, timing runs the times."""

    m: int
    n: int
    trials: int
    mean_correct_digits_new: Optional[float] = None
    mean_correct_digits_deboor: Optional[float] = None
    time_new_seconds: Optional[float] = None
    time_deboor_seconds: Optional[float] = None
    entries: int = 0

    def __post_init__(self) -> None:
        if self.trials <= 0:
            raise ValueError(f"trials must be positive, got {self.trials}")
        for name in ('time_new_seconds', 'time_deboor_seconds'):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    @property
    def ratio(self) -> Optional[float]:
        """time_deboor / time_new."""
        if self.time_new_seconds is None or self.time_deboor_seconds is None:
            return None
        if self.time_new_seconds == 0:
            return float('inf')
        return self.time_deboor_seconds / self.time_new_seconds

    def metrics(self) -> Dict[str, float]:
        values = {
            'mean_correct_digits_new': self.mean_correct_digits_new,
            'mean_correct_digits_deboor': self.mean_correct_digits_deboor,
            'time_new_seconds': self.time_new_seconds,
            'time_deboor_seconds': self.time_deboor_seconds,
            'ratio': self.ratio,
        }
        return {name: value for name, value in values.items() if value is not None}


@dataclass
class ExperimentReport:
    kind: str
    records: List[ExperimentRecord] = field(default_factory=list)
    seed: Optional[int] = None
    system: Optional[Dict[str, Any]] = None

    def add(self, record: ExperimentRecord) -> None:
        self.records.append(record)

    def record(self, m: int, n: int) -> ExperimentRecord:
        for record in self.records:
            if (record.m, record.n) == (m, n):
                return record
        raise KeyError(f"no record for m={m}, n={n}")

    def to_frame(self) -> pd.DataFrame:
        """Wide table: one row per cell with m, n, trials and every metric."""
        rows = [{'m': r.m, 'n': r.n, 'trials': r.trials, **r.metrics()} for r in self.records]
        return pd.DataFrame(rows)

    def to_long_frame(self) -> pd.DataFrame:
        rows = [{'m': r.m, 'n': r.n, 'metric': name, 'value': value}
                for r in self.records for name, value in r.metrics().items()]
        return pd.DataFrame(rows, columns=['m', 'n', 'metric', 'value'])

    def to_csv(self) -> str:
        """CSV with columns m,n,metric,value."""
        return self.to_long_frame().to_csv(index=False, lineterminator='\n', float_format='%.6g')

    def format_table(self) -> str:
        """Aligned text table, one line per cell."""
        if self.kind == TIMING:
            columns = [('time_new_seconds', 'new [s]'), ('time_deboor_seconds', 'deBoor [s]'),
                       ('ratio', 'ratio')]
            title = "Running times (seconds, median over repetitions)"
        else:
            columns = [('mean_correct_digits_new', 'mean new'),
                       ('mean_correct_digits_deboor', 'mean deBoor')]
            title = "Mean number of correct digits"

        header = ['m', 'n', 'trials'] + [label for _, label in columns]
        body = []
        for r in self.records:
            metrics = r.metrics()
            cells = [str(r.m), str(r.n), str(r.trials)]
            for name, _ in columns:
                value = metrics.get(name)
                cells.append('-' if value is None else f"{value:.3f}")
            body.append(cells)
        widths = [max(len(row[c]) for row in [header] + body) for c in range(len(header))]
        lines = [title]
        lines.append('  '.join(h.rjust(widths[c]) for c, h in enumerate(header)))
        lines.append('  '.join('-' * w for w in widths))
        lines.extend('  '.join(cell.rjust(widths[c]) for c, cell in enumerate(row)) for row in body)
        return '\n'.join(lines) + '\n'
