"""
Structured logging for library and command-line runs.

Console output goes to stderr so that data written to stdout stays
byte-identical between runs. A rotating log file is added only when a log
directory is configured.
"""

import json
import logging
import logging.handlers
import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Union

_RESERVED = {
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename', 'module',
    'lineno', 'funcName', 'created', 'msecs', 'relativeCreated', 'thread', 'threadName',
    'processName', 'process', 'getMessage', 'exc_info', 'exc_text', 'stack_info', 'taskName',
}


class StructuredFormatter(logging.Formatter):
    """Custom formatter for structured logging with JSON output."""

    def __init__(self, include_extra: bool = True):
        super().__init__()
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as structured JSON."""
        log_data = {
            'timestamp': datetime.fromtimestamp(record.created).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }

        if record.exc_info:
            log_data['exception'] = {
                'type': record.exc_info[0].__name__ if record.exc_info[0] else None,
                'message': str(record.exc_info[1]) if record.exc_info[1] else None,
                'traceback': traceback.format_exception(*record.exc_info)
            }

        if self.include_extra:
            extra_fields = {k: v for k, v in record.__dict__.items() if k not in _RESERVED}
            if extra_fields:
                log_data['extra'] = extra_fields

        # Fractions and numpy scalars in extra fields are written as strings
        return json.dumps(log_data, ensure_ascii=False, default=str)


class LoggerManager:
    """
    Installs the root handlers once per process.

    Provides structured logging with a console handler on stderr and an
    optional rotating file handler.
    """

    def __init__(self,
                 log_dir: Optional[Union[str, Path]] = None,
                 log_level: str = "WARNING",
                 max_file_size: int = 10 * 1024 * 1024,  # 10MB
                 backup_count: int = 5,
                 console_output: bool = True,
                 structured_format: bool = False):
        """
        Initialize logging manager.

        Args:
            log_dir: Directory for log files, None for no file output
            log_level: Minimum log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            max_file_size: Maximum size per log file in bytes
            backup_count: Number of rotated files to keep
            console_output: Whether to write logs to stderr
            structured_format: Whether to use structured JSON format
        """
        self.log_dir = Path(log_dir) if log_dir else None
        self.log_level = getattr(logging, log_level.upper())
        self.max_file_size = max_file_size
        self.backup_count = backup_count
        self.console_output = console_output
        self.structured_format = structured_format

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

        self._setup_logging()
        self._loggers: Dict[str, logging.Logger] = {}

        self.logger = self.get_logger(__name__)
        self.logger.debug("LoggerManager initialized", extra={
            'log_dir': str(self.log_dir) if self.log_dir else None,
            'log_level': log_level,
        })

    def _setup_logging(self) -> None:
        root_logger = logging.getLogger()
        root_logger.handlers.clear()
        root_logger.setLevel(self.log_level)

        if self.structured_format:
            formatter: logging.Formatter = StructuredFormatter()
        else:
            formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

        if self.log_dir is not None:
            file_handler = logging.handlers.RotatingFileHandler(
                filename=self.log_dir / "bspline_bbf.log",
                maxBytes=self.max_file_size,
                backupCount=self.backup_count,
                encoding='utf-8'
            )
            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)

        if self.console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(self.log_level)
            console_handler.setFormatter(formatter)
            root_logger.addHandler(console_handler)

    def get_logger(self, name: str) -> logging.Logger:
        if name not in self._loggers:
            self._loggers[name] = logging.getLogger(name)
        return self._loggers[name]

    def log_error_with_context(self, error: Exception, context: Dict[str, Any]) -> None:
        """
        Log errors with their context; the stack trace is added at DEBUG level.

        Args:
            error: Exception instance
            context: Additional context information
        """
        self.logger.error(f"Error occurred: {str(error)}", extra={
            'error_type': type(error).__name__,
            'error_message': str(error),
            'context': context,
        }, exc_info=error if self.logger.isEnabledFor(logging.DEBUG) else None)


# Global logger manager instance
_logger_manager: Optional[LoggerManager] = None


def initialize_logging(log_dir: Optional[Union[str, Path]] = None,
                       log_level: str = "WARNING",
                       **kwargs: Any) -> LoggerManager:
    """
    Initialize global logging system.

    Args:
        log_dir: Directory for log files, None for console only
        log_level: Minimum log level
        **kwargs: Additional LoggerManager arguments

    Returns:
        LoggerManager instance
    """
    global _logger_manager
    _logger_manager = LoggerManager(log_dir=log_dir, log_level=log_level, **kwargs)
    return _logger_manager


def get_logger(name: str) -> logging.Logger:
    """Logger from the global manager; library modules use logging.getLogger directly."""
    global _logger_manager
    if _logger_manager is None:
        return logging.getLogger(name)
    return _logger_manager.get_logger(name)
