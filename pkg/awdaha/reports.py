"""Structured pass/fail records shared by the analysis layer, harness and CLI."""

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    check: str
    statement: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check": self.check,
            "paper_ref": self.statement,
            "pass": self.passed,
            "detail": self.detail,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        statement = data.get("paper_ref", data.get("statement", ""))
        return cls(data["check"], statement, data["pass"], data.get("detail", {}))


class ReportBuilder:
    """Accumulates named entries; the report passes iff every entry passes."""

    def __init__(self, check, statement):
        self.check = check
        self.statement = statement
        self.entries = []

    def record(self, name, passed, **info):
        self.entries.append({"name": name, "pass": bool(passed), **info})
        return bool(passed)

    def extend(self, report, prefix=None):
        """Fold another report's entries (or the report itself) into this one."""
        entries = report.detail.get("entries")
        if entries is None:
            self.record(prefix or report.check, report.passed)
            return report.passed
        for entry in entries:
            name = f"{prefix}.{entry['name']}" if prefix else entry["name"]
            self.entries.append({**entry, "name": name})
        return report.passed

    @property
    def passed(self):
        return all(entry["pass"] for entry in self.entries)

    def build(self, **extra):
        detail = {"entries": self.entries, **extra}
        return VerificationReport(self.check, self.statement, self.passed, detail)
