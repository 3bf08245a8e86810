"""Unit tests for TabulateAdapter"""

from lib.log.log_formatters.check_entry import CheckEntry
from lib.table.tabulate_adapter import TabulateAdapter


class TestTabulateAdapter:
    def test_check_table_empty(self) -> None:
        """No entries, no table"""
        assert TabulateAdapter.generate_check_table([]) == ""

    def test_check_table_totals(self) -> None:
        """Rows and a totals row after a separating line"""
        entries = [
            CheckEntry("universal", "q=2 n=2", True),
            CheckEntry("universal", "q=2 n=3", False, "1 prime failed"),
        ]
        table = TabulateAdapter.generate_check_table(entries)
        assert "q=2 n=3" in table
        assert "1 prime failed" in table
        assert table.splitlines()[-1].split()[:4] == ["Total", "2", "1", "passed,"]

    def test_dict_table_keeps_text_cells(self) -> None:
        """Numeric-looking polynomial text is not reformatted"""
        table = TabulateAdapter.dict_table([{"prime": "T+1", "ss": "1", "pass": True}, {"prime": "T", "ss": "01"}])
        lines = table.splitlines()
        assert lines[0].split() == ["prime", "ss", "pass"]
        assert lines[2].split() == ["T+1", "1", "true"]
        assert lines[3].split() == ["T", "01", "null"]

    def test_dict_table_empty(self) -> None:
        assert TabulateAdapter.dict_table([]) == ""
