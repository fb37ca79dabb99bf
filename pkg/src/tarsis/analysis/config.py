"""Analysis configuration, also loadable from JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from ..values.string_domains import DOMAINS

JSON_KEYS = {
    "domain": "domain",
    "wideningN": "widening_n",
    "tau": "tau",
    "partitionBound": "partition_bound",
    "format": "format",
}


@dataclass(frozen=True)
class AnalysisConfig:
    domain: str = "tarsis"
    widening_n: int = 2
    tau: int = 5
    partition_bound: int = 8
    format: str = "text"
    # iterations at one loop head before the state threshold is ignored,
    # before strings jump to top, and before giving up
    patience: int = 12
    give_up_strings: int = 24
    max_iterations: int = 64

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}; choose from {', '.join(DOMAINS)}")
        if self.widening_n < 1:
            raise ValueError("widening parameter must be at least 1")
        if self.tau < 0 or self.partition_bound < 0:
            raise ValueError("tau and partition bound must be non-negative")
        if self.format not in ("text", "json"):
            raise ValueError("format must be text or json")

    @staticmethod
    def from_json(text: str, base: "AnalysisConfig | None" = None) -> "AnalysisConfig":
        data = json.loads(text)
        unknown = set(data) - set(JSON_KEYS)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return replace(base or AnalysisConfig(), **{JSON_KEYS[k]: v for k, v in data.items()})

    def to_json(self) -> dict:
        return {k: getattr(self, attr) for k, attr in JSON_KEYS.items()}
