"""Deterministic check reports.

Every verifier returns a Report: an ordered tuple of named check items,
each PASS or FAIL with a witness (element ids bound to the law's
variables in order) and a short rendering of both sides. Item order is a
function of the profile and the checked object only, so rendering the
same report twice is byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    law: str
    ok: bool
    witness: tuple[str, ...] = ()
    detail: str = ""

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.law}"
        out = f"FAIL {self.law}"
        if self.witness:
            out += " at (" + ", ".join(self.witness) + ")"
        if self.detail:
            out += ": " + self.detail
        return out


@dataclass(frozen=True)
class Report:
    subject: str
    items: tuple[CheckItem, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def failures(self) -> tuple[CheckItem, ...]:
        return tuple(i for i in self.items if not i.ok)

    def lines(self) -> list[str]:
        return [i.line() for i in self.items]

    def render(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return "\n".join(self.lines() + [f"RESULT {verdict} {self.subject}"])


def passed(law: str, detail: str = "") -> CheckItem:
    return CheckItem(law, True, (), detail)


def failed(law: str, witness: tuple[str, ...] = (), detail: str = "") -> CheckItem:
    return CheckItem(law, False, witness, detail)


def merge_pre(name: str, sub: Report) -> CheckItem:
    """Summarize a component report as a single pre-check item."""
    if sub.ok:
        return passed(name)
    first = sub.failures()[0]
    return failed(name, first.witness, f"{first.law}" + (f": {first.detail}" if first.detail else ""))
