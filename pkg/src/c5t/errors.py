from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


class C5Present(ValueError):
    """A C5 was found where the input is required to be C5-free."""

    def __init__(self, witness, message: str = "input graph contains a C5"):
        super().__init__(f"{message}: {'-'.join(map(str, witness))}")
        self.witness = tuple(witness)


class ContractViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad input."""


@dataclass
class Verification:
    """Outcome of a verification routine. Failures are data, not exceptions."""

    name: str
    passed: bool
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    precondition_failed: bool = False
    witness: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "precondition_failed": self.precondition_failed,
            "witness": list(self.witness) if self.witness is not None else None,
            "checks": dict(self.checks),
            "details": dict(self.details),
        }
