from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Certificate:
    """Verdict of one criterion, with the data needed to re-derive it.

    ``witnesses`` are plain JSON-ready dicts (index sets, partitions,
    multidegrees, descent indices) so a certificate can be re-checked without
    access to the objects that produced it.
    """

    criterion: str
    holds: bool
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict[str, Any]:
        return {
            "criterion": self.criterion,
            "holds": self.holds,
            "witnesses": self.witnesses,
            "assumptions": self.assumptions,
            "reason": self.reason,
        }


class InconsistentData(ValueError):
    """Two routes that must agree on the given input did not."""
