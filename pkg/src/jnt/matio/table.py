"""Fixed-width text tables and RFC 4180 CSV output."""
from __future__ import annotations

import csv
import io
import numbers
from dataclasses import dataclass
from typing import List, Optional, Sequence

from jnt.errors import DimensionError


@dataclass(frozen=True)
class ColumnSpec:
    """One table column.

    ``precision`` fixes the number of decimals for real values; ``align`` is
    ``"left"`` or ``"right"`` and defaults to right for numeric columns.
    """

    name: str
    width: int = 10
    precision: Optional[int] = None
    align: Optional[str] = None


@dataclass(frozen=True)
class TableSpec:
    columns: Sequence[ColumnSpec]
    separator: str = " "
    rule: bool = True
    title: Optional[str] = None

    @classmethod
    def numeric(cls, names, width=10, precision=1, label=None, label_width=12, **kwargs) -> "TableSpec":
        """Convenience: an optional left-aligned label column plus numeric columns."""
        cols = [ColumnSpec(label, label_width, align="left")] if label is not None else []
        cols += [ColumnSpec(n, width, precision) for n in names]
        return cls(cols, **kwargs)


def format_cell(value, column: ColumnSpec) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, numbers.Real) and column.precision is not None:
        return f"{float(value):.{column.precision}f}"
    if isinstance(value, numbers.Real):
        return repr(float(value))
    return str(value)


def _is_numeric_column(column: ColumnSpec, cells: List[object]) -> bool:
    if column.precision is not None:
        return True
    present = [c for c in cells if c is not None]
    return bool(present) and all(isinstance(c, numbers.Real) and not isinstance(c, bool) for c in present)


def format_table(spec: TableSpec, rows: Sequence[Sequence[object]]) -> str:
    """Render ``rows`` as fixed-width text with a header line.

    A cell longer than its column's width widens the whole column, so every
    row stays aligned.  Output is byte-for-byte reproducible.
    """
    ncols = len(spec.columns)
    for k, row in enumerate(rows):
        if len(row) != ncols:
            raise DimensionError(f"row {k} has {len(row)} cells, table has {ncols} columns")
    rendered = [[format_cell(v, c) for v, c in zip(row, spec.columns)] for row in rows]
    widths, aligns = [], []
    for j, column in enumerate(spec.columns):
        texts = [r[j] for r in rendered]
        widths.append(max([column.width, len(column.name)] + [len(t) for t in texts]))
        align = column.align or ("right" if _is_numeric_column(column, [r[j] for r in rows]) else "left")
        aligns.append(align)

    def line(cells):
        parts = [
            t.rjust(w) if a == "right" else t.ljust(w) for t, w, a in zip(cells, widths, aligns)
        ]
        return spec.separator.join(parts).rstrip()

    out = []
    if spec.title:
        out.append(spec.title)
    out.append(line([c.name for c in spec.columns]))
    if spec.rule:
        out.append(spec.separator.join("-" * w for w in widths))
    out.extend(line(r) for r in rendered)
    return "\n".join(out) + "\n"


def _csv_value(v):
    if isinstance(v, float):
        return repr(float(v))
    return v


def write_csv(stream, header: Sequence[str], rows: Sequence[Sequence[object]]):
    """CSV with minimal RFC 4180 quoting and CRLF line ends; floats keep 17 digits."""
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_value(v) for v in row])


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()
