"""
Logging for bspline-bbf: structured records, execution timing and host info.
"""

from .logger import LoggerManager, StructuredFormatter, get_logger, initialize_logging
from .monitor import SystemInfo, collect_system_info, log_system_info
from .utils import log_execution_time

__all__ = [
    'LoggerManager',
    'StructuredFormatter',
    'SystemInfo',
    'collect_system_info',
    'get_logger',
    'initialize_logging',
    'log_execution_time',
    'log_system_info',
]
