from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .series import Series, compare


@dataclass(frozen=True)
class MatchReport:
    """Outcome of comparing two sides of an identity up to ``q^truncation``."""

    identity: str
    truncation: int
    matched: bool
    first_mismatch: int | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.matched

    def to_dict(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "truncation": self.truncation,
            "matched": self.matched,
            "first_mismatch": self.first_mismatch,
        }
        if self.first_mismatch is not None:
            out["lhs_value"] = self.lhs_value
            out["rhs_value"] = self.rhs_value
        if self.details:
            out["details"] = self.details
        return out


def match_series(identity: str, lhs: Series, rhs: Series, **details) -> MatchReport:
    cmp = compare(lhs, rhs)
    if cmp.equal:
        return MatchReport(identity, cmp.truncation, True, details=details)
    if cmp.first_mismatch is None:
        details = dict(details, reason=f"moduli differ ({lhs.modulus} vs {rhs.modulus})")
        return MatchReport(identity, cmp.truncation, False, details=details)
    k = cmp.first_mismatch
    return MatchReport(identity, cmp.truncation, False, k, lhs[k], rhs[k], details)
