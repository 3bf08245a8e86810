"""JSON formatter - versioned document with stable key order"""

import json

from lib.log.log_formatters.base_log_formatter import BaseLogFormatter
from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.output_format import OutputFormat


class JsonFormatter(BaseLogFormatter):
    def format(self, results: list[ResultDocument], entries: list[CheckEntry], messages: list[RuleMessage]) -> str:
        return json.dumps(self.build_document(results, entries, messages), indent=2, ensure_ascii=False)

    def get_format(self) -> OutputFormat:
        return OutputFormat.JSON
