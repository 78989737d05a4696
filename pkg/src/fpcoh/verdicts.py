"""Structured results for comparison runs: a Verdict per checked statement,
a JSON document shape shared by every subcommand, CSV export of dimension
tables, and the exit-code rules scripts rely on.

Determinism contract: the JSON document is byte-identical across repeated
runs and across worker counts.  Wall-clock timing therefore lives only on
the in-memory object and is never serialized; payloads may not contain
floats.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

AGREE = "agree"
DISAGREE = "disagree"
OUTSIDE = "outside-hypothesis"
ERROR = "error"

_STATUSES = (AGREE, DISAGREE, OUTSIDE, ERROR)


def _jsonable(value):
    """Plain JSON value with tuples turned into lists; floats are rejected
    so serialized output cannot depend on timing or platform rounding."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed in verdict payloads")
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            if isinstance(k, tuple):
                k = ",".join(str(x) for x in k)
            elif not isinstance(k, str):
                k = str(k)
            out[k] = _jsonable(v)
        return out
    raise TypeError(f"cannot serialize {type(value).__name__} in a payload")


@dataclass
class Verdict:
    subject: str
    parameters: dict
    status: str
    payload: dict = field(default_factory=dict)
    seconds: float = 0.0  # in-memory only, see module docstring

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "parameters": _jsonable(self.parameters),
            "status": self.status,
            "payload": _jsonable(self.payload),
        }


def report_document(command: str, parameters: dict, verdicts) -> dict:
    from . import __version__

    return {
        "version": __version__,
        "command": command,
        "parameters": _jsonable(parameters),
        "verdicts": [v.to_json_dict() for v in verdicts],
    }


def render_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def exit_code(verdicts) -> int:
    """0 when every comparison agrees (pure evaluations count as agreeing);
    2 when any comparison disagreed, including a failed comparison attached
    to an outside-hypothesis verdict; 1 when a run errored out."""
    code = 0
    for v in verdicts:
        if v.status == DISAGREE:
            return 2
        if v.status == OUTSIDE and v.payload.get("comparison_agrees") is False:
            return 2
        if v.status == ERROR:
            code = 1
    return code


def dimension_rows(verdict: Verdict) -> list[dict]:
    """Flat CSV rows for a verdict's dimension table.  Each payload table row
    carries degree or multidegree plus a dimension; parameters are repeated
    on every row."""
    rows = []
    for entry in verdict.payload.get("dimension_table", ()):
        row = {"subject": verdict.subject, "status": verdict.status}
        for k, v in verdict.parameters.items():
            if isinstance(v, (list, tuple)):
                v = ",".join(str(x) for x in v)
            row[str(k)] = v
        if "series" in entry:
            row["series"] = entry["series"]
        if "degree" in entry:
            row["degree"] = entry["degree"]
        if "multidegree" in entry:
            md = entry["multidegree"]
            if isinstance(md, (list, tuple)):
                md = ",".join(str(x) for x in md)
            row["multidegree"] = md
        row["dimension"] = entry["dimension"]
        rows.append(row)
    return rows


def write_csv(path: str, verdicts) -> None:
    rows = []
    for v in verdicts:
        rows.extend(dimension_rows(v))
    lead = ["subject", "status"]
    tail = ["series", "degree", "multidegree", "dimension"]
    param_cols = sorted(
        {k for row in rows for k in row} - set(lead) - set(tail)
    )
    columns = lead + param_cols + [c for c in tail if any(c in r for r in rows)]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, restval="")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def human_lines(verdicts) -> list[str]:
    """One aligned line per verdict for terminal output."""
    lines = []
    for v in verdicts:
        params = " ".join(f"{k}={_compact(val)}" for k, val in v.parameters.items())
        note = ""
        if v.status == DISAGREE and "witness" in v.payload:
            note = f"  witness: {json.dumps(_jsonable(v.payload['witness']), sort_keys=True)}"
        elif v.status == OUTSIDE and "comparison_agrees" in v.payload:
            note = f"  comparison_agrees: {v.payload['comparison_agrees']}"
        lines.append(f"[{v.status:>18}] {v.subject}  {params}{note}")
    return lines


def _compact(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(x) for x in value)
    return str(value)
