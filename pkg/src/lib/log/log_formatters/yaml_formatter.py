"""YAML formatter - the JSON document rendered as block YAML"""

import yaml

from lib.log.log_formatters.base_log_formatter import BaseLogFormatter
from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.output_format import OutputFormat


class YamlFormatter(BaseLogFormatter):
    """Same content as the JSON document, keys kept in insertion order"""

    def format(self, results: list[ResultDocument], entries: list[CheckEntry], messages: list[RuleMessage]) -> str:
        document = self.build_document(results, entries, messages)
        return yaml.safe_dump(document, default_flow_style=False, sort_keys=False, allow_unicode=True).rstrip("\n")

    def get_format(self) -> OutputFormat:
        return OutputFormat.YAML
