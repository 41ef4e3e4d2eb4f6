"""Report documents and their text / JSON / CSV renderings.

A ReportDocument is the single structured result every CLI subcommand
produces; the JSON shape is stable per mode: {mode, base|bases, <payload>,
warnings}. Reals are serialized with 6 significant digits, and decimal
points are used everywhere regardless of locale conventions.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any


@dataclass
class ReportDocument:
    mode: str
    base: Any = None  # int, INFINITE, or None when `bases` is used
    bases: list | None = None
    payload: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def json_base(b):
    if isinstance(b, float) and math.isinf(b):
        return "inf"
    return b


def _round_reals(value):
    """Recursively round floats to 6 significant digits; reject non-finite ones."""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("report bodies must contain only finite numbers")
        return float(f"{value:.6g}")
    if isinstance(value, dict):
        return {k: _round_reals(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_reals(v) for v in value]
    return value


def to_json_dict(doc: ReportDocument) -> dict:
    out: dict[str, Any] = {"mode": doc.mode}
    if doc.bases is not None:
        out["bases"] = [json_base(b) for b in doc.bases]
    else:
        out["base"] = json_base(doc.base)
    for key, value in doc.payload.items():
        out[key] = _round_reals(value)
    out["warnings"] = list(doc.warnings)
    return out


def render_json(doc: ReportDocument) -> str:
    return json.dumps(to_json_dict(doc), indent=2)


def format_digit(d: int) -> str:
    """Digits above 9 are shown as bracketed numbers, e.g. [10], not letters."""
    return str(d) if d <= 9 else f"[{d}]"


def format_base(b) -> str:
    if isinstance(b, float) and math.isinf(b):
        return "inf"
    return str(b)


def _fmt_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def aligned_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append(
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        )
    return "\n".join(lines)


def _rows_table_text(rows: list[dict], columns: list[str]) -> str:
    body = [[_fmt_cell(r.get(c)) for c in columns] for r in rows]
    return aligned_table(columns, body)


def _histogram_text(hist: dict) -> str:
    total = hist["total"]
    rows = []
    for i, c in enumerate(hist["counts"]):
        freq = c / total if total else None
        rows.append([format_digit(i + 1), str(c), _fmt_cell(freq)])
    table = aligned_table(["digit", "count", "frequency"], rows)
    return f"{table}\ntotal  {total}"


def _fit_text(fit: dict | None) -> str:
    if fit is None:
        return "fit: not available"
    return (
        f"chi2 = {fit['chi2']:.6g}  df = {fit['df']}  p_value = {fit['p_value']:.6g}\n"
        f"mad = {fit['mad']:.6g}  max_deviation = {fit['max_deviation']:.6g}  "
        f"verdict = {fit['verdict']}"
    )


def render_text(doc: ReportDocument) -> str:
    parts: list[str] = []
    if doc.mode in ("pmf", "table1"):
        rows = doc.payload["rows"]
        columns = list(rows[0].keys())
        shown = [dict(r, digit=format_digit(r["digit"])) for r in rows]
        parts.append(_rows_table_text(shown, columns))
        if "delta" in columns:
            worst = max(rows, key=lambda r: abs(r["delta"]))
            parts.append(
                f"max |delta| = {abs(worst['delta']):.6f} (digit {worst['digit']})"
            )
    elif doc.mode == "table2":
        rows = [dict(r, base=format_base(r["base"])) for r in doc.payload["rows"]]
        for r in rows:
            if r.get("reference_p1") is not None:
                r["reference_p1"] = f"{r['reference_p1']:.2f}"
        parts.append(
            _rows_table_text(
                rows,
                ["base", "n", "empirical_p1", "asymptotic_p1", "reference_p1"],
            )
        )
    elif doc.mode == "sequence":
        if "digits" in doc.payload:
            parts.append(" ".join(format_digit(d) for d in doc.payload["digits"]))
        else:
            parts.append(_histogram_text(doc.payload["histogram"]))
    elif doc.mode == "analyze":
        parts.append(_histogram_text(doc.payload["histogram"]))
        parts.append(_fit_text(doc.payload["fit"]))
    else:
        raise ValueError(f"unknown report mode {doc.mode!r}")
    for w in doc.warnings:
        parts.append(f"warning: {w}")
    return "\n".join(parts) + "\n"


def _csv_value(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return value


def render_csv(doc: ReportDocument) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if doc.mode in ("pmf", "table1", "table2"):
        rows = doc.payload["rows"]
        columns = list(rows[0].keys())
        writer.writerow(columns)
        for r in rows:
            writer.writerow(
                [_csv_value(format_base(r[c]) if c == "base" else r[c]) for c in columns]
            )
    elif doc.mode == "sequence" and "digits" in doc.payload:
        writer.writerow(["index", "digit"])
        for i, d in enumerate(doc.payload["digits"]):
            writer.writerow([i, d])
    elif doc.mode in ("sequence", "analyze"):
        hist = doc.payload["histogram"]
        total = hist["total"]
        writer.writerow(["digit", "count", "frequency"])
        for i, c in enumerate(hist["counts"]):
            writer.writerow([i + 1, c, _csv_value(c / total if total else None)])
    else:
        raise ValueError(f"unknown report mode {doc.mode!r}")
    return out.getvalue()
