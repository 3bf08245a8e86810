import logging
import sys
from typing import Any

from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.formatter_factory import LogFormatterFactory
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.log_level import RESET, LogLevel
from lib.log.output_format import OutputFormat


class CustomFormatter(logging.Formatter):
    """Colored level prefix for the stderr channel"""

    def format(self, record: logging.LogRecord) -> str:
        level = LogLevel.from_python_level(record.levelno)
        log_fmt = f"{level.get_level_color()}{str(level):<5} - %(message)s{RESET}"
        return logging.Formatter(log_fmt).format(record)


class Logger:
    """Diagnostics go to stderr immediately; results, checks and rule messages are buffered for stdout"""

    def __init__(self, level: LogLevel = LogLevel.INFO, format: OutputFormat = OutputFormat.TEXT):
        self.level = level
        self.output_format = format
        self.results: list[ResultDocument] = []
        self.check_entries: list[CheckEntry] = []
        self.messages: list[RuleMessage] = []

        self.general_logger = logging.getLogger(f"drinfeld_ss.{id(self)}")
        self.general_logger.setLevel(level.to_python_level())
        self.general_logger.propagate = False
        self.general_handler = logging.StreamHandler(sys.stderr)
        self.general_handler.setFormatter(CustomFormatter())
        self.general_logger.addHandler(self.general_handler)

        self.formatter = LogFormatterFactory.create(self.output_format)

    def set_level(self, level: LogLevel) -> None:
        self.level = level
        self.general_logger.setLevel(level.to_python_level())
        self.general_handler.setLevel(level.to_python_level())

    def set_format(self, format: OutputFormat) -> None:
        self.output_format = format
        self.formatter = LogFormatterFactory.create(format)

    def log(self, level: LogLevel, message: str, *args: Any) -> None:
        """Operational message on stderr: progress, timings, cache events, warnings.

        Use logRule() for failed checks so they end up in the report.
        """
        if level.value > self.level.value:
            return
        record = logging.LogRecord(
            name="drinfeld_ss",
            level=level.to_python_level(),
            pathname="",
            lineno=0,
            msg=message,
            args=args,
            exc_info=None,
        )
        self.general_logger.handle(record)

    def logRule(self, level: LogLevel, rule: str, message: str, subject: str | None = None, **kwargs: Any) -> None:
        """Buffer a failed check under its rule id, e.g. congruence-mismatch"""
        if level.value > self.level.value:
            return
        self.messages.append(RuleMessage(level=level, rule=rule, message=message, subject=subject, **kwargs))

    def logCheckEntry(
        self, suite: str, subject: str, passed: bool, detail: str = "", elapsed: float | None = None
    ) -> None:
        """Buffer one report row; the elapsed time only goes to stderr"""
        self.check_entries.append(CheckEntry(suite=suite, subject=subject, passed=passed, detail=detail))
        if elapsed is not None:
            self.log(LogLevel.DEBUG, "%s %s: %s in %.3fs", suite, subject, "pass" if passed else "fail", elapsed)

    def logResult(self, command: str, fields: dict[str, Any], text_keys: tuple[str, ...] | None = None) -> None:
        self.results.append(ResultDocument(command=command, fields=fields, text_keys=text_keys))

    def failure_count(self) -> int:
        return sum(1 for e in self.check_entries if not e.passed)

    def flush(self) -> None:
        """Write everything buffered with the configured formatter, then clear the buffers"""
        if not (self.results or self.check_entries or self.messages):
            return
        output = self.formatter.format(self.results, self.check_entries, self.messages)
        if output != "":
            print(output, file=sys.stdout, end="\n")
        self.results.clear()
        self.check_entries.clear()
        self.messages.clear()
