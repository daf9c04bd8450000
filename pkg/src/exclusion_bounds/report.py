"""The result record returned by every bound."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .errors import DomainError


@dataclass(frozen=True)
class BoundReport:
    """A computed bound with the constants and intermediate values behind it.

    Attributes
    ----------
    value : float
        The bound itself. Always finite.
    statistics : StatisticsParams or None
        Statistics of the particles the bound refers to.
    constants_used : dict
        Every registry constant that entered ``value``.
    diagnostics : dict
        Intermediate integrals, branch flags and solver details.
    """

    value: float
    statistics: Any = None
    constants_used: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v):
            raise DomainError(f"bound value must be finite, got {v}")
        object.__setattr__(self, "value", v)

    def to_dict(self):
        stats = None
        if self.statistics is not None:
            stats = self.statistics.to_dict()
        return {
            "value": self.value,
            "statistics": stats,
            "constants_used": dict(self.constants_used),
            "diagnostics": dict(self.diagnostics),
        }
