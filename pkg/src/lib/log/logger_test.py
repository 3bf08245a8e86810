"""Unit tests for Logger class"""

import json

import pytest

from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.log.output_format import OutputFormat


class TestLogger:
    """Buffering and flushing of results, checks and rule messages"""

    def test_defaults(self) -> None:
        """INFO level, text format, empty buffers"""
        logger = Logger()
        assert logger.level == LogLevel.INFO
        assert logger.output_format == OutputFormat.TEXT
        assert logger.results == [] and logger.check_entries == [] and logger.messages == []

    def test_set_level_and_format(self) -> None:
        """Setters replace level and formatter"""
        logger = Logger()
        logger.set_level(LogLevel.DEBUG)
        logger.set_format(OutputFormat.JSON)
        assert logger.level == LogLevel.DEBUG
        assert logger.formatter.get_format() == OutputFormat.JSON

    def test_log_goes_to_stderr(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Operational messages are written to stderr with a level prefix and never buffered"""
        logger = Logger(LogLevel.INFO)
        logger.log(LogLevel.INFO, "computed %s in %d steps", "mu_2", 3)
        logger.log(LogLevel.DEBUG, "hidden")
        captured = capsys.readouterr()
        assert "INFO  - computed mu_2 in 3 steps" in captured.err
        assert "hidden" not in captured.err
        assert captured.out == ""
        assert logger.messages == []

    def test_logRule_filtered_by_level(self) -> None:
        """Rule messages below the configured level are dropped"""
        logger = Logger(LogLevel.ERROR)
        logger.logRule(LogLevel.WARNING, "cache-corrupt", "ignored")
        logger.logRule(LogLevel.ERROR, "congruence-mismatch", "mu_2 differs", subject="T^2+T+1", degree=2)
        assert len(logger.messages) == 1
        message = logger.messages[0]
        assert message.rule == "congruence-mismatch"
        assert message.subject == "T^2+T+1"
        assert message.extra == {"degree": 2}

    def test_check_entry_timing_only_on_stderr(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Elapsed time is logged at DEBUG on stderr and is absent from the report"""
        logger = Logger(LogLevel.DEBUG, OutputFormat.JSON)
        logger.logCheckEntry("partitions", "n=3", True, elapsed=0.25)
        logger.logCheckEntry("partitions", "n=4", False, detail="count 4 != 5")
        assert logger.failure_count() == 1
        logger.flush()
        captured = capsys.readouterr()
        assert "0.250s" in captured.err
        document = json.loads(captured.out)
        assert document["checks"][0] == {"suite": "partitions", "subject": "n=3", "status": "pass"}
        assert document["summary"]["failed"] == 1
        assert "0.25" not in captured.out

    def test_flush_text_single_value(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A result with one shown key prints its bare value"""
        logger = Logger()
        logger.logResult("pn", {"q": "2", "value": "x^3+T^-1*x^2+x+1"}, text_keys=("value",))
        logger.flush()
        assert capsys.readouterr().out == "x^3+T^-1*x^2+x+1\n"

    def test_flush_clears_buffers(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A second flush writes nothing"""
        logger = Logger()
        logger.logResult("mu", {"value": "j+T^2+T"})
        logger.logRule(LogLevel.ERROR, "r", "m")
        logger.logCheckEntry("s", "x", True)
        logger.flush()
        capsys.readouterr()
        logger.flush()
        assert capsys.readouterr().out == ""
        assert logger.results == [] and logger.check_entries == [] and logger.messages == []
