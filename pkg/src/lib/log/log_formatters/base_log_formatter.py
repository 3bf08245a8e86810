"""Abstract base class for output formatters"""

from abc import ABC, abstractmethod
from typing import Any

from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.log_level import LogLevel
from lib.log.output_format import OutputFormat

REPORT_FORMAT_VERSION = 1


class BaseLogFormatter(ABC):
    """Renders buffered results, check entries and rule messages into one stdout document"""

    @abstractmethod
    def format(self, results: list[ResultDocument], entries: list[CheckEntry], messages: list[RuleMessage]) -> str:
        pass

    @abstractmethod
    def get_format(self) -> OutputFormat:
        pass

    def get_summary(self, entries: list[CheckEntry], messages: list[RuleMessage]) -> dict[str, int]:
        """Counts only: wall-clock data never reaches stdout"""
        failed = sum(1 for e in entries if not e.passed)
        return {
            "checks": len(entries),
            "passed": len(entries) - failed,
            "failed": failed,
            "rule_error_count": sum(1 for m in messages if m.level == LogLevel.ERROR),
            "rule_warning_count": sum(1 for m in messages if m.level == LogLevel.WARNING),
        }

    def get_entries_sorted_by_severity(self, entries: list[CheckEntry]) -> list[CheckEntry]:
        """Failures first, otherwise in logging order"""
        return sorted(entries, key=lambda e: -e.get_severity())

    def build_document(
        self, results: list[ResultDocument], entries: list[CheckEntry], messages: list[RuleMessage]
    ) -> dict[str, Any]:
        """Versioned document shared by the structured formats"""
        document: dict[str, Any] = {"format": REPORT_FORMAT_VERSION}
        if len(results) == 1:
            document.update(results[0].to_dict())
        elif results:
            document["results"] = [result.to_dict() for result in results]
        if entries:
            document["checks"] = [entry.to_dict() for entry in entries]
        if messages:
            document["failures"] = [message.to_dict() for message in messages]
        if entries or messages:
            document["summary"] = self.get_summary(entries, messages)
        return document
