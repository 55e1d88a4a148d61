"""Machine-readable check reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "inconclusive")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "monoidtab report",
    "type": "object",
    "required": ["schema_version", "claim", "parameters", "status", "data"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "claim": {"type": "string"},
        "parameters": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "data": {},
    },
}


def jsonable(x: Any):
    """Convert exact numbers and containers into JSON-friendly values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        num, den = int(x.numerator), int(x.denominator)
        return num if den == 1 else f"{num}/{den}"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_lists"):
        return x.to_lists()
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class Report:
    claim: str
    parameters: dict
    status: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "claim": self.claim,
            "parameters": jsonable(self.parameters),
            "status": self.status,
            "data": jsonable(self.data),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("unsupported report schema version")
        return cls(d["claim"], d["parameters"], d["status"], d["data"])


def combine(claim: str, parameters: dict, reports: list[Report], data: dict | None = None) -> Report:
    statuses = {r.status for r in reports}
    status = "fail" if "fail" in statuses else ("inconclusive" if "inconclusive" in statuses else "pass")
    payload = {"checks": [r.to_dict() for r in reports]}
    if data:
        payload.update(data)
    return Report(claim, parameters, status, payload)


def as_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))
