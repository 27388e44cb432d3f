"""Text, JSON and CSV renderings of audit results."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from ..lattice import format_grade
from .engine import AuditResult, AxiomGrid


def _grade(s: str, decimal: bool) -> str:
    return format_grade(Fraction(s), decimal=True) if decimal else s


def _display_witness(w: dict | None, decimal: bool) -> dict | None:
    if w is None or not decimal:
        return w
    out = dict(w)
    out["sets"] = {k: [_grade(x, True) for x in v] for k, v in w["sets"].items()}
    return out


def witness_text(w: dict | None, decimal: bool = False) -> str:
    if w is None:
        return "-"
    w = _display_witness(w, decimal)
    parts = [f"{name}=[{', '.join(grades)}]" for name, grades in w["sets"].items()]
    if "theta" in w:
        parts.append(f"theta={w['theta']}")
    return f"n={w['n']} g={w['g']} " + " ".join(parts)


def results_text(results: list[AuditResult], decimal: bool = False) -> str:
    width = max([len(r.property_id) for r in results] + [8])
    lines = [f"{'property'.ljust(width)}  {'verdict':<12}  {'kind':<8}  {'checked':>10}  witness"]
    for r in results:
        kind = "theorem" if r.theorem else "record"
        checked = r.stats.get("checked", "")
        lines.append(
            f"{r.property_id.ljust(width)}  {r.verdict.value:<12}  {kind:<8}  {checked:>10}  "
            f"{witness_text(r.witness, decimal)}"
        )
    refuted = sum(r.theorem_refuted for r in results)
    lines.append(f"{len(results)} properties, {refuted} theorem refutations")
    return "\n".join(lines) + "\n"


def results_json(results: list[AuditResult], decimal: bool = False) -> str:
    docs = []
    for r in results:
        d = r.to_dict()
        d["witness"] = _display_witness(d["witness"], decimal)
        docs.append(d)
    return json.dumps(docs, indent=2, sort_keys=True) + "\n"


def grid_csv(grid: AxiomGrid) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["measure", *grid.columns])
    for row in grid.rows:
        writer.writerow([row, *(grid.cell(row, c).verdict.value for c in grid.columns)])
    return buf.getvalue()


def grid_text(grid: AxiomGrid) -> str:
    width = max(len(c) for c in grid.columns)
    lines = ["measure  " + " ".join(c.rjust(width) for c in grid.columns)]
    for row in grid.rows:
        cells = (grid.cell(row, c).verdict.value.rjust(width) for c in grid.columns)
        lines.append(row.rjust(7) + "  " + " ".join(cells))
    return "\n".join(lines) + "\n"


def grid_json(grid: AxiomGrid, decimal: bool = False) -> str:
    doc = {
        "columns": list(grid.columns),
        "rows": list(grid.rows),
        "cells": {
            row: {c: json.loads(results_json([grid.cell(row, c)], decimal))[0] for c in grid.columns}
            for row in grid.rows
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
