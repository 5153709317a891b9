from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import EdgeColoring


@dataclass(frozen=True)
class Solution:
    """Result of an exact engine.

    ``stats`` carries operation counts (guesses visited, table sizes, ...) and
    is excluded from equality.
    """

    value: int
    coloring: EdgeColoring
    engine: str
    stats: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.coloring.value() != self.value:
            raise AssertionError(
                f"{self.engine}: witness colours {self.coloring.value()} edges, value {self.value}"
            )
