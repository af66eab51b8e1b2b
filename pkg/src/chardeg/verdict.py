"""Structured pass/fail verdicts and the line-oriented report format."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Witness:
    """One (input, expected, actual) triple backing a verdict."""

    input: str
    expected: str
    actual: str


@dataclass
class LemmaVerdict:
    check_id: str
    params: dict
    status: Status
    witnesses: list[Witness] = field(default_factory=list)
    runtime_ms: int = 0

    def __post_init__(self):
        if self.status is Status.FAIL and not self.witnesses:
            raise ValueError("FAIL verdicts must carry witnesses")


def _params_token(params: dict) -> str:
    if not params:
        return "-"
    return ",".join(f"{k}={v}" for k, v in params.items())


def render_report(verdicts: list[LemmaVerdict], include_runtime: bool = False) -> str:
    """One line per verdict, indented witness lines for non-PASS, and a
    trailing TOTAL summary line.

    Runtimes are omitted by default so that identical runs produce
    byte-identical reports; pass ``include_runtime=True`` for timings.
    """
    lines = []
    tally = {Status.PASS: 0, Status.FAIL: 0, Status.SKIPPED: 0}
    for v in verdicts:
        tally[v.status] += 1
        line = f"{v.check_id} {_params_token(v.params)} {v.status.value} {len(v.witnesses)}"
        if include_runtime:
            line += f" {v.runtime_ms}"
        lines.append(line)
        if v.status is not Status.PASS:
            for w in v.witnesses:
                lines.append(f"  {w.input} | expected: {w.expected} | actual: {w.actual}")
    lines.append(f"TOTAL pass={tally[Status.PASS]} fail={tally[Status.FAIL]} "
                 f"skipped={tally[Status.SKIPPED]}")
    return "\n".join(lines) + "\n"
