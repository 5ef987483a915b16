"""JSON, CSV and text renderings of verification outcomes."""
from __future__ import annotations

import csv
import io
import json

from .oracle import VerificationOutcome

REPORT_FORMATS = ("json", "csv", "text")


def _fmt(value, precision: int):
    if isinstance(value, float):
        return format(value, f".{precision}g")
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value))
    return value


def to_json(outcome: VerificationOutcome, precision: int = 12, timing: bool = False) -> str:
    data = outcome.to_dict(timing=timing)
    data["rows"] = [{k: _fmt(v, precision) if isinstance(v, float) else v for k, v in row.items()}
                    for row in data["rows"]]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def to_csv(outcome: VerificationOutcome, precision: int = 12) -> str:
    """One row per checked parameter, columns in first-seen order."""
    columns: list[str] = []
    for row in outcome.rows:
        columns += [c for c in row if c not in columns]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in outcome.rows:
        writer.writerow({k: _fmt(v, precision) for k, v in row.items()})
    return buf.getvalue()


def to_text(outcome: VerificationOutcome, precision: int = 12, timing: bool = False) -> str:
    status = "HOLDS" if outcome.holds else "FAILS"
    lines = [f"{outcome.claim_id}: {status} over {outcome.parameter_range} ({len(outcome.rows)} rows)"]
    if timing:
        lines.append(f"  elapsed: {outcome.elapsed:.3f}s")
    lines += [f"  note: {n}" for n in outcome.notes]
    for cx in outcome.counterexamples:
        lines.append("  counterexample: " + ", ".join(f"{k}={_fmt(v, precision)}" for k, v in cx.items()))
    return "\n".join(lines) + "\n"


def render(outcome: VerificationOutcome, fmt: str, precision: int = 12, timing: bool = False) -> str:
    if fmt == "json":
        return to_json(outcome, precision, timing)
    if fmt == "csv":
        return to_csv(outcome, precision)
    if fmt == "text":
        return to_text(outcome, precision, timing)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")
