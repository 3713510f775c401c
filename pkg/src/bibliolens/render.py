"""Deterministic rendering of analysis results.

Analyses return full-precision values; this module holds the one place
where display conventions are applied (half-up two-decimal percentages,
truncated three-decimal impact factors). A Table is the common shape every
renderer consumes. Rendering the same result twice is byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .numfmt import percent_display

Cell = "int | str | Num"


@dataclass(frozen=True)
class Num:
    """A numeric cell carrying full precision plus its display string."""

    value: float
    display: str

    def __str__(self) -> str:
        return self.display


def pct(num: int, den: int) -> Num:
    return Num(value=100.0 * num / den if den else 0.0, display=percent_display(num, den))


@dataclass
class Table:
    title: str
    headers: list[str]
    rows: list[list] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _display(cell) -> str:
    if isinstance(cell, Num):
        return cell.display
    if isinstance(cell, float):
        return repr(cell)
    return str(cell)


def render_csv(tables: list[Table]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, table in enumerate(tables):
        if i:
            writer.writerow([])
        writer.writerow([f"# {table.title}"])
        writer.writerow(table.headers)
        for row in table.rows:
            writer.writerow([_display(c) for c in row])
        for note in table.notes:
            writer.writerow([f"# {note}"])
    return buf.getvalue()


def render_markdown(tables: list[Table]) -> str:
    lines: list[str] = []
    for table in tables:
        lines.append(f"## {table.title}")
        lines.append("")
        lines.append("| " + " | ".join(table.headers) + " |")
        lines.append("| " + " | ".join("---" for _ in table.headers) + " |")
        for row in table.rows:
            lines.append("| " + " | ".join(_display(c) for c in row) + " |")
        for note in table.notes:
            lines.append("")
            lines.append(f"_{note}_")
        lines.append("")
    return "\n".join(lines)


def _json_cell(cell):
    if isinstance(cell, Num):
        return {"display": cell.display, "value": cell.value}
    return cell


def render_json(tables: list[Table]) -> str:
    payload = [
        {
            "title": t.title,
            "headers": t.headers,
            "rows": [[_json_cell(c) for c in row] for row in t.rows],
            "notes": t.notes,
        }
        for t in tables
    ]
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


RENDERERS = {"csv": render_csv, "md": render_markdown, "json": render_json}


def render(tables: list[Table], fmt: str) -> str:
    try:
        return RENDERERS[fmt](tables)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(RENDERERS)}")
