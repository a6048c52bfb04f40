"""Bundled published counts for two novels and their translations.

See ``data/README.md`` for what each file holds. Text keys are
``"slaughterhouse_five"`` and ``"cats_cradle"``; roles are ``"source"``
and ``"translation"``.
"""

from __future__ import annotations

import csv
from importlib import resources
from pathlib import Path

from .fitting import PowerFit
from .growth import GrowthCurve
from .lexstats import LexSummary
from .tables import CountTable, curve_from_table, read_count_table

TEXTS = ("slaughterhouse_five", "cats_cradle")

FRAGMENT_TABLES = {
    ("slaughterhouse_five", "source"): "sh5_source_fragments.csv",
    ("cats_cradle", "source"): "cc_source_fragments.csv",
    ("slaughterhouse_five", "translation"): "sh5_translation_fragments.csv",
}
CUMULATIVE_TABLES = {
    ("slaughterhouse_five", "source"): "sh5_source_cumulative.csv",
    ("cats_cradle", "translation"): "cc_translation_cumulative.csv",
}


def data_path(name: str = "") -> Path:
    root = Path(str(resources.files("lexdyn") / "data"))
    return root / name if name else root


def fragment_table(text: str, role: str) -> CountTable:
    return read_count_table(data_path(FRAGMENT_TABLES[text, role]))


def cumulative_table(text: str, role: str) -> CountTable:
    return read_count_table(data_path(CUMULATIVE_TABLES[text, role]))


def cumulative_curve(text: str, role: str) -> GrowthCurve:
    return curve_from_table(cumulative_table(text, role), label=f"{text}/{role}")


def all_tables() -> dict[str, CountTable]:
    names = sorted(set(FRAGMENT_TABLES.values()) | set(CUMULATIVE_TABLES.values()))
    return {n: read_count_table(data_path(n)) for n in names}


def _rows(name):
    with open(data_path(name), newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def whole_texts() -> dict[tuple[str, str], dict]:
    """Whole-novel records: ``summary`` (LexSummary) plus printed values."""
    out = {}
    for r in _rows("whole_texts.csv"):
        hapax = int(r["hapax_count"]) if r["hapax_count"] else None
        out[r["text"], r["role"]] = {
            "summary": LexSummary(int(r["types"]), int(r["tokens"]), hapax),
            "ttr_printed": r["ttr_printed"],
            "hapax_percent_printed": int(r["hapax_percent_printed"]),
        }
    return out


def heaps_fits() -> dict[tuple[str, str], PowerFit]:
    return {
        (r["text"], r["role"]): PowerFit(a=float(r["a"]), b=float(r["b"]))
        for r in _rows("heaps_fits.csv")
    }
