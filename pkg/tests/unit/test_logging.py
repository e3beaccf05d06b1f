"""Unit tests for structured logging, timing decorator and host info."""

import json
import logging
import sys
from fractions import Fraction

import pytest

from bspline_bbf.logging import (
    LoggerManager,
    StructuredFormatter,
    collect_system_info,
    get_logger,
    initialize_logging,
    log_execution_time,
)


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)


def make_record(message, **extra):
    record = logging.LogRecord("bspline_bbf.test", logging.INFO, __file__, 10, message, None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


@pytest.mark.unit
class TestStructuredFormatter:
    """Test cases for StructuredFormatter."""

    def test_json_fields(self):
        """Test that a record becomes one JSON object with the standard keys."""
        data = json.loads(StructuredFormatter().format(make_record("converted span")))
        assert data['message'] == "converted span"
        assert data['level'] == "INFO"
        assert data['logger'] == "bspline_bbf.test"
        assert 'extra' not in data

    def test_extra_fields(self):
        """Test that extra fields are kept and exotic values are stringified."""
        data = json.loads(StructuredFormatter().format(make_record("cell", m=3, value=Fraction(1, 6))))
        assert data['extra'] == {'m': 3, 'value': "1/6"}

    def test_extra_fields_disabled(self):
        data = json.loads(StructuredFormatter(include_extra=False).format(make_record("cell", m=3)))
        assert 'extra' not in data

    def test_exception_info(self):
        """Test exception details in the JSON output."""
        try:
            raise ValueError("bad knot")
        except ValueError:
            record = make_record("failed")
            record.exc_info = sys.exc_info()
        data = json.loads(StructuredFormatter().format(record))
        assert data['exception']['type'] == "ValueError"
        assert data['exception']['message'] == "bad knot"


@pytest.mark.unit
class TestLoggerManager:
    """Test cases for LoggerManager."""

    def test_console_only_by_default(self, restore_root_logger):
        LoggerManager(log_level="INFO")
        handlers = restore_root_logger.handlers
        assert len(handlers) == 1
        assert isinstance(handlers[0], logging.StreamHandler)
        assert restore_root_logger.level == logging.INFO

    def test_repeated_setup_does_not_stack_handlers(self, restore_root_logger):
        LoggerManager()
        LoggerManager()
        assert len(restore_root_logger.handlers) == 1

    def test_file_handler(self, temp_dir, restore_root_logger):
        """Test structured records written to the rotating log file."""
        manager = LoggerManager(log_dir=temp_dir / "logs", log_level="INFO",
                                console_output=False, structured_format=True)
        manager.get_logger("bspline_bbf.test").info("timing cell", extra={'m': 10})
        for handler in restore_root_logger.handlers:
            handler.flush()

        lines = (temp_dir / "logs" / "bspline_bbf.log").read_text(encoding='utf-8').splitlines()
        entries = [json.loads(line) for line in lines]
        assert any(e['message'] == "timing cell" and e['extra'] == {'m': 10} for e in entries)
        for handler in restore_root_logger.handlers:
            handler.close()

    def test_error_with_context(self, restore_root_logger, caplog):
        manager = LoggerManager(log_level="ERROR", console_output=False)
        restore_root_logger.addHandler(caplog.handler)
        try:
            raise RuntimeError("boom")
        except RuntimeError as e:
            with caplog.at_level(logging.ERROR):
                manager.log_error_with_context(e, {'span': 2})
        assert any(r.error_type == "RuntimeError" and r.context == {'span': 2} for r in caplog.records)
        assert all(r.exc_info is None for r in caplog.records)

    def test_error_traceback_at_debug(self, restore_root_logger, caplog):
        manager = LoggerManager(log_level="DEBUG", console_output=False)
        restore_root_logger.addHandler(caplog.handler)
        error = ValueError("bad span")
        with caplog.at_level(logging.DEBUG):
            manager.log_error_with_context(error, {'span': 1})
        record = next(r for r in caplog.records if r.levelno == logging.ERROR)
        assert record.exc_info[1] is error

    def test_global_manager(self, restore_root_logger):
        manager = initialize_logging(log_level="DEBUG", console_output=False)
        assert get_logger("bspline_bbf.x") is manager.get_logger("bspline_bbf.x")


@pytest.mark.unit
class TestExecutionTime:
    """Test cases for the log_execution_time decorator."""

    def test_success(self, caplog):
        @log_execution_time("bspline_bbf.test")
        def work(x):
            return x * 2

        with caplog.at_level(logging.INFO, logger="bspline_bbf.test"):
            assert work(4) == 8
        record = next(r for r in caplog.records if r.getMessage() == "Function work completed")
        assert record.success is True
        assert record.execution_time_seconds >= 0

    def test_failure_is_logged_and_raised(self, caplog):
        @log_execution_time("bspline_bbf.test")
        def broken():
            raise ValueError("no spans")

        with caplog.at_level(logging.INFO, logger="bspline_bbf.test"):
            with pytest.raises(ValueError):
                broken()
        record = next(r for r in caplog.records if r.getMessage() == "Function broken failed")
        assert record.success is False
        assert record.error == "no spans"


@pytest.mark.unit
class TestSystemInfo:

    def test_collect(self):
        info = collect_system_info()
        assert info.logical_cores is None or info.logical_cores >= 1
        assert info.memory_total_mb > 0
        assert set(info.to_dict()) >= {'platform', 'python_version', 'numpy_version', 'cpu_model'}
