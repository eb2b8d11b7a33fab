"""Validation reports: a list of violations, empty when everything holds."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    condition: str
    where: str
    detail: str = ""

    def __str__(self):
        text = f"[{self.condition}] at {self.where}"
        return f"{text}: {self.detail}" if self.detail else text


class Report(list):
    """List of :class:`Violation`; truthiness follows the list, use ``ok``."""

    def __init__(self, items=(), title=""):
        super().__init__(items)
        self.title = title

    @property
    def ok(self) -> bool:
        return len(self) == 0

    def add(self, condition, where, detail=""):
        self.append(Violation(condition, str(where), detail))

    def to_json(self):
        return {"title": self.title, "ok": self.ok,
                "violations": [{"condition": v.condition, "where": v.where,
                                "detail": v.detail} for v in self]}

    def __str__(self):
        head = f"{self.title}: " if self.title else ""
        if self.ok:
            return head + "PASS"
        return head + "FAIL\n" + "\n".join("  " + str(v) for v in self)
