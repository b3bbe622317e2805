"""
Command reports.

A report is filled section by section and rendered either as plain text with
"== section ==" markers and "key: value" lines, or as JSON. Everything but
the timing block is deterministic for fixed inputs and flags.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .infra.execution_logs import get_execution_logs, get_execution_stats

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"


class InputDigest(BaseModel):
    path: str
    sha256: str


class Report(BaseModel):
    command: str
    inputs: List[InputDigest] = Field(default_factory=list)
    degree: Optional[int] = None
    notes: List[str] = Field(default_factory=list)
    sections: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    verdicts: Dict[str, str] = Field(default_factory=dict)
    timing: Dict[str, float] = Field(default_factory=dict)

    def add_input(self, path) -> None:
        data = Path(path).read_bytes()
        self.inputs.append(InputDigest(path=str(path), sha256=hashlib.sha256(data).hexdigest()))

    def section(self, name: str) -> Dict[str, Any]:
        return self.sections.setdefault(name, {})

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def verdict(self, name: str, passed: bool) -> bool:
        self.verdicts[name] = PASS if passed else FAIL
        if not passed:
            logger.warning(f"Verdict {name}: FAIL")
        return passed

    @property
    def passed(self) -> bool:
        return all(v == PASS for v in self.verdicts.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 3

    def attach_timing(self) -> None:
        """Total latency per tracked task and overall, from the execution log."""
        tasks = sorted({record.task for record in get_execution_logs()})
        timing = {task: round(get_execution_stats(task)["total_latency"], 6) for task in tasks}
        if tasks:
            timing["total"] = round(get_execution_stats()["total_latency"], 6)
        self.timing = timing


def _format_value(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)) and all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        return " ".join(str(v) for v in value)
    return json.dumps(value, sort_keys=False, default=str)


def render_text(report: Report) -> str:
    lines = ["== report ==", f"command: {report.command}"]
    if report.degree is not None:
        lines.append(f"degree: {report.degree}")
    for digest in report.inputs:
        lines.append(f"input: {digest.path} sha256={digest.sha256}")
    for note in report.notes:
        lines.append(f"note: {note}")
    for name, payload in report.sections.items():
        lines.append(f"== {name} ==")
        for key, value in payload.items():
            if isinstance(value, (list, tuple)) and value and all(isinstance(v, str) for v in value):
                lines.append(f"{key}:")
                lines.extend(f"  {v}" for v in value)
            else:
                lines.append(f"{key}: {_format_value(value)}")
    if report.verdicts:
        lines.append("== verdicts ==")
        lines.extend(f"{name}: {result}" for name, result in report.verdicts.items())
    if report.timing:
        lines.append("== timing ==")
        lines.extend(f"timing {task}: {seconds:.3f}s" for task, seconds in report.timing.items())
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, default=str) + "\n"
