"""Outcome of checking one law on one instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np


def render(value) -> str:
    from .algebra import Spectrum, format_matrix, format_spectrum

    if isinstance(value, np.ndarray):
        return format_matrix(value.reshape(value.shape[0], -1)) if value.ndim == 2 else str(value)
    if isinstance(value, Spectrum):
        return format_spectrum(value)
    if hasattr(value, "vertices") and hasattr(value, "edges") and hasattr(value, "edge_labels"):
        from .io import serialize_ohg

        return serialize_ohg(value)
    return f"{value}\n"


@dataclass
class LawReport:
    law_id: str
    hypothesis_met: bool = True
    reason: str = ""
    passed: Optional[bool] = None
    checks: list[tuple[str, bool]] = field(default_factory=list)
    details: dict[str, str] = field(default_factory=dict)
    witness: Optional[str] = None

    @classmethod
    def not_met(cls, law_id: str, reason: str) -> "LawReport":
        return cls(law_id, hypothesis_met=False, reason=reason)

    @property
    def status(self) -> str:
        if not self.hypothesis_met:
            return "hypothesis not met"
        return "pass" if self.passed else "fail"

    def check(self, name: str, ok: bool, **witness) -> bool:
        ok = bool(ok)
        self.checks.append((name, ok))
        if not ok:
            for key, value in witness.items():
                self.details[f"{name}: {key}"] = render(value)
        return ok

    def check_equal(self, name: str, left: np.ndarray, right: np.ndarray) -> bool:
        from .algebra import mat_eq

        return self.check(name, mat_eq(left, right), left=left, right=right)

    def check_same(self, name: str, left, right) -> bool:
        return self.check(name, left == right, left=left, right=right)

    def merge(self, other: "LawReport") -> None:
        self.checks.extend(other.checks)
        self.details.update(other.details)

    def finish(self) -> "LawReport":
        self.passed = all(ok for _, ok in self.checks)
        return self

    def render(self) -> str:
        lines = [f"{self.law_id}: {self.status}"]
        if not self.hypothesis_met:
            lines[0] += f" ({self.reason})"
        for name, ok in self.checks:
            lines.append(f"  {'ok  ' if ok else 'FAIL'} {name}")
        for key, text in self.details.items():
            lines.append(f"  -- {key}")
            lines.extend("     " + row for row in text.rstrip("\n").split("\n"))
        return "\n".join(lines) + "\n"
