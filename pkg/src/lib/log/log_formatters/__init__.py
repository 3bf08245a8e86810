"""Output formatters for drinfeld-ss results and verification reports"""

from .formatter_factory import LogFormatterFactory
from .json_formatter import JsonFormatter
from .text_formatter import TextFormatter
from .yaml_formatter import YamlFormatter

__all__ = ["TextFormatter", "JsonFormatter", "YamlFormatter", "LogFormatterFactory"]
