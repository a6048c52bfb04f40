"""CSV/JSON readers and writers for curves, count tables and reports.

Recognized CSV layouts (by header):

- ``x,y``: arbitrary positive points for a power fit
- ``cum_tokens,cum_types[,ttr]``: a growth curve
- ``fragment,types,tokens[,...]``: per-fragment counts, optional ``whole`` row
- ``fragments,cum_types,cum_tokens[,...]``: running counts, ``whole`` row last

All output is UTF-8 with ``\\n`` line endings and ``.`` as decimal mark.
JSON uses sorted keys and Python's shortest round-trip float repr.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import LexDynError
from .growth import GrowthCurve
from .lexstats import LexSummary

__all__ = [
    "CountTable",
    "read_csv",
    "read_points",
    "read_count_table",
    "read_curve",
    "csv_layout",
    "curve_from_table",
    "to_csv",
    "to_json",
]


class TableError(LexDynError):
    pass


@dataclass(frozen=True)
class CountTable:
    """Rows of published or computed (types, tokens) counts."""

    kind: str  # "fragment" or "cumulative"
    labels: list[str]
    rows: list[LexSummary]
    whole: LexSummary | None = None
    printed_ttr: list[str] | None = None


def read_csv(path) -> tuple[list[str], list[dict]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise TableError(f"{path}: no header row")
        header = [h.strip() for h in reader.fieldnames]
        rows = [{k.strip(): (v or "").strip() for k, v in r.items() if k} for r in reader]
    return header, rows


def _layout(header) -> str:
    h = set(header)
    if {"x", "y"} <= h:
        return "points"
    if {"cum_tokens", "cum_types"} <= h and "fragments" not in h:
        return "curve"
    if {"fragment", "types", "tokens"} <= h:
        return "fragment"
    if {"fragments", "cum_types", "cum_tokens"} <= h:
        return "cumulative"
    raise TableError(f"unrecognized CSV header: {','.join(header)}")


def csv_layout(path) -> str:
    header, _ = read_csv(path)
    return _layout(header)


def read_count_table(path) -> CountTable:
    header, rows = read_csv(path)
    kind = _layout(header)
    if kind not in ("fragment", "cumulative"):
        raise TableError(f"{path}: not a count table ({kind})")
    label_col, types_col, tokens_col = (
        ("fragment", "types", "tokens")
        if kind == "fragment"
        else ("fragments", "cum_types", "cum_tokens")
    )
    labels, summaries, printed = [], [], []
    whole = None
    for r in rows:
        s = LexSummary(type_count=int(r[types_col]), token_count=int(r[tokens_col]))
        if r[label_col] == "whole":
            whole = s
            if kind == "fragment":
                continue
        labels.append(r[label_col])
        summaries.append(s)
        printed.append(r.get("ttr_printed", ""))
    return CountTable(
        kind="fragment" if kind == "fragment" else "cumulative",
        labels=labels,
        rows=summaries,
        whole=whole,
        printed_ttr=printed if any(printed) else None,
    )


def curve_from_table(table: CountTable, label: str = "") -> GrowthCurve:
    if table.kind != "cumulative":
        raise TableError("per-fragment counts carry no cumulative type counts")
    return GrowthCurve.from_counts(
        [r.token_count for r in table.rows],
        [r.type_count for r in table.rows],
        granularity="fragment",
        label=label,
    )


def read_points(path) -> list[tuple[float, float]]:
    """Fit points from any recognized layout: (x, y) or (tokens, types)."""
    header, rows = read_csv(path)
    kind = _layout(header)
    if kind == "points":
        return [(float(r["x"]), float(r["y"])) for r in rows]
    if kind == "curve":
        return [(float(r["cum_tokens"]), float(r["cum_types"])) for r in rows]
    table = read_count_table(path)
    return [(float(s.token_count), float(s.type_count)) for s in table.rows]


def read_curve(path, label: str = "") -> GrowthCurve:
    header, rows = read_csv(path)
    kind = _layout(header)
    if kind == "curve":
        return GrowthCurve.from_counts(
            [r["cum_tokens"] for r in rows],
            [r["cum_types"] for r in rows],
            label=label,
        )
    if kind == "cumulative":
        return curve_from_table(read_count_table(path), label=label)
    raise TableError(f"{path}: layout {kind!r} is not a growth curve")


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"

