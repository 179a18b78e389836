"""Table / CSV / JSON rendering of report rows (lists of flat dicts)."""

import csv
import io
import json
from typing import Dict, List, Sequence

SCHEMA = "outerturan-report"
SCHEMA_VERSION = 1


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_table(rows: Sequence[Dict], columns: Sequence[str]) -> str:
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_csv(rows: Sequence[Dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({c: r[c] for c in columns})
    return buf.getvalue().rstrip("\n")


def render_json(rows: Sequence[Dict], command: str) -> str:
    doc = {"schema": SCHEMA, "version": SCHEMA_VERSION, "command": command, "rows": list(rows)}
    return json.dumps(doc, indent=2)


def render(rows: List[Dict], fmt: str, command: str, columns: Sequence[str] = ()) -> str:
    columns = list(columns) or (list(rows[0]) if rows else [])
    if fmt == "table":
        return render_table(rows, columns)
    if fmt == "csv":
        return render_csv(rows, columns)
    if fmt == "json":
        return render_json(rows, command)
    if fmt == "graph6":
        return "\n".join(v for r in rows for k, v in r.items() if k.endswith("witness") and v)
    raise ValueError(f"unknown format {fmt!r}")
