from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .partitions import PartitionFunction


@dataclass(frozen=True)
class CongruenceClaim:
    """``function(A n + B) == 0 (mod m)`` for every ``n >= 0``."""

    function: PartitionFunction
    A: int
    B: int
    m: int
    provenance: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.A < 1 or self.B < 0 or self.m < 2:
            raise ValueError(f"bad claim parameters A={self.A}, B={self.B}, m={self.m}")

    def argument(self, n: int) -> int:
        return self.A * n + self.B

    def last_argument(self, n_count: int) -> int:
        return self.A * (n_count - 1) + self.B

    def describe(self) -> str:
        return f"{self.function}({self.A}n+{self.B}) == 0 (mod {self.m})"

    def key(self) -> tuple:
        return (self.function, self.A, self.B, self.m)

    def to_dict(self) -> dict[str, Any]:
        return {
            "function": str(self.function),
            "A": self.A,
            "B": self.B,
            "m": self.m,
            "claim": self.describe(),
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class ScanResult:
    """Outcome of scanning ``n = 0 .. n_checked-1`` for one claim.

    A counterexample carries the residue that was seen, the exact value
    recomputed without a modulus and, for small arguments, the value from the
    enumeration oracle.
    """

    claim: CongruenceClaim
    n_checked: int
    requested: int
    counterexample_n: int | None = None
    residue: int | None = None
    exact_value: int | None = None
    oracle_value: int | None = None
    label: str = "catalog"
    capped: bool = False

    @property
    def verified(self) -> bool:
        return self.counterexample_n is None

    @property
    def scanned(self) -> bool:
        return self.n_checked > 0

    @property
    def outcome(self) -> str:
        if not self.verified:
            return "counterexample"
        return "verified_to_n" if self.scanned else "not_scanned"

    def to_dict(self) -> dict[str, Any]:
        out = self.claim.to_dict()
        out.update(
            outcome=self.outcome,
            n_checked=self.n_checked,
            requested=self.requested,
            capped=self.capped,
            label=self.label,
        )
        if not self.verified:
            out["counterexample"] = {
                "n": self.counterexample_n,
                "argument": self.claim.argument(self.counterexample_n),
                "residue": self.residue,
                "exact_value": self.exact_value,
                "oracle_value": self.oracle_value,
            }
        return out
