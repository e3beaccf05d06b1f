"""
Host description attached to benchmark runs.
"""

import platform
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np
import psutil

from .logger import get_logger


@dataclass
class SystemInfo:
    """Machine the timings were taken on."""
    platform: str
    python_version: str
    numpy_version: str
    cpu_model: str
    physical_cores: Optional[int]
    logical_cores: Optional[int]
    cpu_freq_mhz: Optional[float]
    memory_total_mb: float
    memory_available_mb: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def collect_system_info() -> SystemInfo:
    """Snapshot of CPU and memory via psutil."""
    memory = psutil.virtual_memory()
    try:
        freq = psutil.cpu_freq()
    except (NotImplementedError, FileNotFoundError, OSError):
        freq = None
    return SystemInfo(
        platform=platform.platform(),
        python_version=platform.python_version(),
        numpy_version=np.__version__,
        cpu_model=platform.processor() or platform.machine(),
        physical_cores=psutil.cpu_count(logical=False),
        logical_cores=psutil.cpu_count(logical=True),
        cpu_freq_mhz=freq.current if freq else None,
        memory_total_mb=memory.total / (1024 * 1024),
        memory_available_mb=memory.available / (1024 * 1024),
    )


def log_system_info() -> SystemInfo:
    info = collect_system_info()
    get_logger(__name__).info("System info", extra={'system': info.to_dict()})
    return info
