"""Result of a computation command"""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class ResultDocument:
    """Ordered fields of a result; text output shows only text_keys when given"""

    command: str
    fields: dict[str, Any] = field(default_factory=dict)
    text_keys: tuple[str, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"command": self.command, **self.fields}

    def shown_keys(self) -> tuple[str, ...]:
        return self.text_keys if self.text_keys is not None else tuple(self.fields)
