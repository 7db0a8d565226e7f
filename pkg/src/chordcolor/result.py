"""Answers returned by the solvers."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any

from chordcolor.instance import PartialColoring


class Verdict(Enum):
    YES = "yes"
    NO = "no"


@dataclass
class SolveStats:
    nodes: int = 0
    depth: int = 0
    brute_force_calls: int = 0
    family_sizes: list[int] = field(default_factory=list)
    max_child_ratio: float = 0.0
    branching: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SolveResult:
    """Verdict plus, for yes, a total coloring of the input instance."""

    verdict: Verdict
    coloring: PartialColoring | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "coloring": (
                None
                if self.coloring is None
                else {str(v): c.value for v, c in self.coloring.items()}
            ),
            "stats": self.stats.to_dict(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)
