"""Adapter for tabulate library to generate formatted tables"""

from collections.abc import Sequence
from typing import Any, cast

from tabulate import SEPARATING_LINE, tabulate

from lib.log.log_formatters.check_entry import CheckEntry


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return "null" if value is None else str(value)


class TabulateAdapter:
    """Plain-text tables for the text output format"""

    @staticmethod
    def generate_check_table(entries: list[CheckEntry]) -> str:
        """One row per check and a totals row"""
        if not entries:
            return ""
        table_data: list[Any] = [[e.suite, e.subject, e.status, e.detail] for e in entries]
        failed = sum(1 for e in entries if not e.passed)
        table_data.append(SEPARATING_LINE)
        table_data.append(["Total", str(len(entries)), f"{len(entries) - failed} passed, {failed} failed", ""])
        return TabulateAdapter.display_table(table_data, headers=["Suite", "Subject", "Status", "Detail"])

    @staticmethod
    def dict_table(rows: list[dict[str, Any]]) -> str:
        """Rows sharing the keys of the first row, in that order"""
        if not rows:
            return ""
        headers = list(rows[0])
        return TabulateAdapter.display_table([[_cell(row.get(h)) for h in headers] for row in rows], headers=headers)

    @staticmethod
    def display_table(
        tabular_data: Any,
        headers: Sequence[str] = (),
        tablefmt: str = "simple",
        colalign: Sequence[str | None] | None = None,
    ) -> str:
        """Cells are kept verbatim: polynomial text must not be reparsed as numbers"""
        return cast(
            str,
            tabulate(tabular_data, headers=headers, tablefmt=tablefmt, disable_numparse=True, colalign=colalign),
        )
