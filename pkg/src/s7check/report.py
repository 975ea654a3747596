"""Verification reports and their JSON / CSV encodings."""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

CSV_COLUMNS = ("name", "anchor", "pass", "observed", "expected", "tolerance")


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    observed: Any
    expected: Any
    tolerance: float | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "pass": bool(self.passed),
            "observed": _jsonable(self.observed),
            "expected": _jsonable(self.expected),
            "tolerance": self.tolerance,
        }


@dataclass
class Report:
    command: str
    seed: int
    parameters: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    wall_time: float | None = None

    def add(self, name: str, anchor: str, passed, observed, expected, tolerance: float | None = None) -> Check:
        check = Check(name, anchor, bool(passed), observed, expected, tolerance)
        self.checks.append(check)
        return check

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict:
        passed = sum(c.passed for c in self.checks)
        return {
            "total": len(self.checks),
            "passed": passed,
            "failed": len(self.checks) - passed,
            "all_pass": passed == len(self.checks),
        }

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "seed": self.seed,
            "parameters": _jsonable(self.parameters),
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "tolist"):
        return _jsonable(x.tolist())
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if hasattr(x, "__float__"):
        return float(x)
    return str(x)


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in report.checks:
        d = c.to_dict()
        w.writerow([
            d["name"],
            d["anchor"],
            "true" if d["pass"] else "false",
            json.dumps(d["observed"]),
            json.dumps(d["expected"]),
            "" if d["tolerance"] is None else repr(d["tolerance"]),
        ])
    return buf.getvalue()


class ReportWriteError(OSError):
    pass


def emit_report(report: Report, fmt: str = "json", path: str | Path | None = None) -> str:
    """Serialize ``report`` and write it to ``path`` (standard output if None)."""
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        text = to_csv(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return text
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ReportWriteError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return text


def parse_report(text: str, fmt: str = "json") -> Report:
    """Inverse of the serializers.  CSV carries no header metadata, so the
    command comes back as an empty string and the seed as -1."""
    if fmt == "json":
        d = json.loads(text)
        checks = [
            Check(c["name"], c["anchor"], c["pass"], c["observed"], c["expected"], c["tolerance"]) for c in d["checks"]
        ]
        return Report(d["command"], d["seed"], d["parameters"], checks)
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
        checks = [
            Check(
                r["name"],
                r["anchor"],
                r["pass"] == "true",
                json.loads(r["observed"]),
                json.loads(r["expected"]),
                float(r["tolerance"]) if r["tolerance"] else None,
            )
            for r in rows
        ]
        return Report("", -1, {}, checks)
    raise ValueError(f"unknown report format {fmt!r}")
