"""Structured pass/fail outcomes shared by every check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(obj: Any) -> Any:
    """Convert report payloads (tuples, sets, Fractions, numpy ints) to JSON types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return str(obj)


@dataclass
class Report:
    """Outcome of one check.

    ``lhs``/``rhs`` hold the evaluated sides of the headline (in)equality,
    ``witnesses`` the per-item evaluations or offending faces, ``data`` any
    extra structured output that does not fit the fixed schema.
    """

    check: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    equality: bool | None = None
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.passed)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "equality": self.equality,
            "witnesses": jsonable(self.witnesses),
            "notes": list(self.notes),
        }
        if self.data:
            out["data"] = jsonable(self.data)
        return out
