from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Sequence, Union

from .rational import format_rational

Value = Union[Fraction, int, Sequence[Union[Fraction, int]]]


def _render(value: Value):
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    return [format_rational(v) for v in value]


@dataclass
class IdentityReport:
    """Outcome of checking one identity at one parameter point.

    ``passed`` is true exactly when ``lhs == rhs``. ``flagged`` marks reports
    where a formula as literally displayed in the source disagreed with the
    exact computation; ``note`` then says which reading was checked instead.
    """

    identity: str
    params: Dict[str, Any]
    lhs: Value
    rhs: Value
    passed: bool = field(init=False)
    flagged: bool = False
    note: str = ""

    def __post_init__(self):
        if isinstance(self.lhs, (Fraction, int)) != isinstance(self.rhs, (Fraction, int)):
            raise TypeError("lhs and rhs must have the same shape")
        if not isinstance(self.lhs, (Fraction, int)):
            self.lhs = tuple(self.lhs)
            self.rhs = tuple(self.rhs)
        self.passed = self.lhs == self.rhs

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "pass": self.passed,
        }
        if self.flagged:
            out["flagged"] = True
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))
