"""Result records produced by the verifiers and equation checker.

Every verifier returns a :class:`VerificationReport`: a flat list of named
residuals, one per checked identity, so a failure is localized to the exact
equation that broke.  Entries flagged as not required (e.g. the counit law
of a deliberately non-unital quantum function) are reported but excluded
from the overall verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Word

__all__ = ["CheckEntry", "VerificationReport", "EquationReport"]


@dataclass(frozen=True)
class CheckEntry:
    """One checked identity: its name, residual and verdict."""

    axiom: str
    residual: float
    passed: bool
    required: bool = True

    def __repr__(self):
        mark = "ok" if self.passed else "FAIL"
        extra = "" if self.required else ", optional"
        return f"{self.axiom}: {mark} (residual {self.residual:.3e}{extra})"


@dataclass(frozen=True)
class VerificationReport:
    """Residuals of every checked identity of one structure."""

    subject: str
    entries: tuple[CheckEntry, ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries if e.required)

    def entry(self, axiom: str) -> CheckEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(f"no entry {axiom!r} in report for {self.subject}")

    def residual(self, axiom: str) -> float:
        return self.entry(axiom).residual

    @property
    def max_residual(self) -> float:
        return max((e.residual for e in self.entries), default=0.0)

    def __repr__(self):
        verdict = "passed" if self.passed else "FAILED"
        lines = [f"{self.subject}: {verdict} (tol {self.tol:g})"]
        lines += [f"  {e!r}" for e in self.entries]
        return "\n".join(lines)


@dataclass(frozen=True)
class EquationReport:
    """Outcome of comparing two morphisms with a common signature."""

    lhs_signature: tuple[Word, Word]
    residual: float
    passed: bool
    tol: float

    def __repr__(self):
        dom, cod = self.lhs_signature
        verdict = "passed" if self.passed else "FAILED"
        return (
            f"equation {dom!r} -> {cod!r}: {verdict} "
            f"(residual {self.residual:.3e}, tol {self.tol:g})"
        )


def entry_from_residual(axiom: str, res: float, eps: float, required: bool = True) -> CheckEntry:
    return CheckEntry(axiom=axiom, residual=res, passed=res <= eps, required=required)
