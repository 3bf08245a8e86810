"""Unit tests for YamlFormatter and JsonFormatter"""

import json

import pytest
import yaml

from lib.log.log_formatters.check_entry import CheckEntry
from lib.log.log_formatters.json_formatter import JsonFormatter
from lib.log.log_formatters.result_document import ResultDocument
from lib.log.log_formatters.rule_message import RuleMessage
from lib.log.log_formatters.yaml_formatter import YamlFormatter
from lib.log.log_level import LogLevel


@pytest.fixture
def report() -> tuple[list[ResultDocument], list[CheckEntry], list[RuleMessage]]:
    universal = [{"prime": "T^2+T+1", "degree": 2, "|U|": 1, "ss": "j+1", "pass": True}]
    results = [ResultDocument("verify", {"q": "2", "max_n": 2, "universal": universal})]
    entries = [CheckEntry("universal", "n=2", True), CheckEntry("partitions", "n=2", False, "count 1 != 2")]
    messages = [RuleMessage(LogLevel.ERROR, "partition-count", "count 1 != 2", subject="n=2")]
    return results, entries, messages


class TestStructuredFormatters:
    """JSON and YAML carry the same versioned document"""

    def test_json_document(self, report: tuple) -> None:
        """Format version first, then the result fields, checks, failures and summary"""
        document = json.loads(JsonFormatter().format(*report))
        assert list(document) == ["format", "command", "q", "max_n", "universal", "checks", "failures", "summary"]
        assert document["format"] == 1
        assert document["universal"][0]["|U|"] == 1
        assert document["failures"][0] == {
            "level": "ERROR",
            "rule": "partition-count",
            "subject": "n=2",
            "message": "count 1 != 2",
        }
        assert document["summary"] == {
            "checks": 2,
            "passed": 1,
            "failed": 1,
            "rule_error_count": 1,
            "rule_warning_count": 0,
        }

    def test_yaml_matches_json(self, report: tuple) -> None:
        """Both formats decode to the same data with the same key order"""
        from_yaml = yaml.safe_load(YamlFormatter().format(*report))
        from_json = json.loads(JsonFormatter().format(*report))
        assert from_yaml == from_json
        assert list(from_yaml) == list(from_json)

    def test_several_results(self) -> None:
        """More than one result is listed under results"""
        results = [ResultDocument("mu", {"n": 1}), ResultDocument("gamma", {"n": 1})]
        document = json.loads(JsonFormatter().format(results, [], []))
        assert document == {"format": 1, "results": [{"command": "mu", "n": 1}, {"command": "gamma", "n": 1}]}

    def test_deterministic(self, report: tuple) -> None:
        """Identical input renders byte-identical output"""
        assert YamlFormatter().format(*report) == YamlFormatter().format(*report)
