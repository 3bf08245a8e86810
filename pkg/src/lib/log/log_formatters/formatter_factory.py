"""Factory for creating output formatters"""

from lib.log.log_formatters.base_log_formatter import BaseLogFormatter
from lib.log.log_formatters.json_formatter import JsonFormatter
from lib.log.log_formatters.text_formatter import TextFormatter
from lib.log.log_formatters.yaml_formatter import YamlFormatter
from lib.log.output_format import OutputFormat


class LogFormatterFactory:
    _formatters: dict[OutputFormat, type[BaseLogFormatter]] = {
        OutputFormat.TEXT: TextFormatter,
        OutputFormat.JSON: JsonFormatter,
        OutputFormat.YAML: YamlFormatter,
    }

    @staticmethod
    def create(format: OutputFormat) -> BaseLogFormatter:
        """Formatter for the given format, text when unknown"""
        formatter_class = LogFormatterFactory._formatters.get(format, TextFormatter)
        return formatter_class()
