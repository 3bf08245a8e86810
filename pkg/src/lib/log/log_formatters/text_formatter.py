"""Text formatter - bare values, key: value lines and tabulate tables"""

from typing import Any

from lib.log.log_formatters.base_log_formatter import BaseLogFormatter
from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.output_format import OutputFormat
from lib.table.tabulate_adapter import TabulateAdapter


def scalar_text(value: Any) -> str:
    """Lowercase booleans and comma separated lists, as in the JSON document"""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (list, tuple)):
        return ", ".join(scalar_text(v) for v in value)
    return str(value)


def _is_table(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(row, dict) for row in value)


class TextFormatter(BaseLogFormatter):
    """A single shown field prints as its bare value, several as key: value lines"""

    def format(self, results: list[ResultDocument], entries: list[CheckEntry], messages: list[RuleMessage]) -> str:
        blocks = [self._format_result(result) for result in results]
        if messages:
            blocks.append("\n".join(self._format_message(m) for m in messages))
        if entries:
            blocks.append(TabulateAdapter.generate_check_table(self.get_entries_sorted_by_severity(entries)))
            summary = self.get_summary(entries, messages)
            blocks.append(f"checks: {summary['checks']}, passed: {summary['passed']}, failed: {summary['failed']}")
        return "\n".join(block for block in blocks if block)

    def _format_result(self, result: ResultDocument) -> str:
        keys = result.shown_keys()
        if len(keys) == 1:
            value = result.fields[keys[0]]
            return TabulateAdapter.dict_table(value) if _is_table(value) else scalar_text(value)
        lines = []
        for key in keys:
            value = result.fields[key]
            if _is_table(value):
                lines.append(f"{key}:")
                lines.append(TabulateAdapter.dict_table(value))
            else:
                lines.append(f"{key}: {scalar_text(value)}")
        return "\n".join(lines)

    def _format_message(self, message: RuleMessage) -> str:
        where = f" {message.subject}" if message.subject is not None else ""
        return f"{message.rule} ({message.level.name}){where}: {message.message}"

    def get_format(self) -> OutputFormat:
        return OutputFormat.TEXT
