"""Deterministic rendering of report structures.

The JSON renderer is the single serialization path for both the CLI and
the HTTP service, so identical inputs produce byte-identical payloads:
keys are sorted, indentation is fixed at two spaces, and every float is
formatted with six significant digits. Rendering is idempotent: parsing a
payload and re-rendering it reproduces the same bytes.

CSV output has a header row, RFC-style minimal quoting, and LF line
endings. Table output is for humans and makes no stability promises
beyond determinism.
"""

from __future__ import annotations

import csv
import io
import json
import math

__all__ = [
    "format_float",
    "canonical_json",
    "render_payload",
    "render_csv",
    "render_table",
    "mflops_display",
]


def format_float(value: float) -> str:
    """Six-significant-digit form, valid as a JSON number token."""
    if math.isnan(value) or math.isinf(value):
        raise ValueError(f"cannot render non-finite float {value!r}")
    return format(value, ".6g")


def _render(value: object, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        keys = sorted(value)
        for i, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings, got {key!r}")
            out.append("  " * (indent + 1) + json.dumps(key, ensure_ascii=False) + ": ")
            _render(value[key], indent + 1, out)
            out.append(",\n" if i < len(keys) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append("  " * (indent + 1))
            _render(item, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot render {type(value).__name__} in a report")


def canonical_json(value: object) -> str:
    out: list[str] = []
    _render(value, 0, out)
    return "".join(out)


def render_payload(value: object) -> bytes:
    """Canonical JSON plus a trailing newline, encoded as UTF-8."""
    return (canonical_json(value) + "\n").encode("utf-8")


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def render_csv(fieldnames: list[str], rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in fieldnames])
    return buffer.getvalue()


def render_table(headers: list[str], rows: list[list[object]]) -> str:
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, text in enumerate(row):
            widths[i] = max(widths[i], len(text))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(headers))),
    ]
    for row in cells:
        lines.append("  ".join(text.ljust(widths[i]) for i, text in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def mflops_display(total_flops: int) -> str:
    """MFLOPs truncated (not rounded) to three decimals, e.g. 312532 -> 0.312.

    Truncation matches how the methodology example presents its total.
    """
    return f"{total_flops // 1000 / 1000:.3f}"
