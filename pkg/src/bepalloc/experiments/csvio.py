"""Deterministic CSV emission.

Plain comma-separated values, '.' decimal point, 12 significant digits, a
``#``-prefixed metadata block on top.  Nothing time- or host-dependent is
ever written, so identical config and seed give byte-identical files.
Cells without a defined value (e.g. means over an empty feasible set) are
written as the explicit marker ``NA`` rather than dropped.
"""

from pathlib import Path

NA = "NA"


def format_cell(value) -> str:
    if value is None:
        return NA
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render_csv(metadata, header, rows) -> str:
    lines = [f"# {key}: {value}" for key, value in metadata]
    lines.append(",".join(header))
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row width {len(row)} != header width {len(header)}")
        lines.append(",".join(format_cell(c) for c in row))
    return "\n".join(lines) + "\n"


def write_csv(out_path, metadata, header, rows) -> str:
    text = render_csv(metadata, header, rows)
    if out_path:
        Path(out_path).write_text(text)
    return text
