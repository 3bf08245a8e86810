"""Unit tests for LogFormatterFactory"""

import pytest

from lib.log.log_formatters.formatter_factory import LogFormatterFactory
from lib.log.log_formatters.json_formatter import JsonFormatter
from lib.log.log_formatters.text_formatter import TextFormatter
from lib.log.log_formatters.yaml_formatter import YamlFormatter
from lib.log.output_format import OutputFormat


class TestLogFormatterFactory:
    @pytest.mark.parametrize(
        "output_format,formatter_class",
        [
            (OutputFormat.TEXT, TextFormatter),
            (OutputFormat.JSON, JsonFormatter),
            (OutputFormat.YAML, YamlFormatter),
        ],
    )
    def test_create(self, output_format: OutputFormat, formatter_class: type) -> None:
        """Each format has its formatter, which reports that format back"""
        formatter = LogFormatterFactory.create(output_format)
        assert isinstance(formatter, formatter_class)
        assert formatter.get_format() == output_format

    def test_unknown_falls_back_to_text(self) -> None:
        """An unregistered key yields the text formatter"""
        assert isinstance(LogFormatterFactory.create("html"), TextFormatter)  # type: ignore[arg-type]
