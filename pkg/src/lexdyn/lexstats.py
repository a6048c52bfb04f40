"""Type/token summaries, frequency tables and rank-frequency fits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .errors import FitError, StatsError
from .fitting import PowerFit, power_fit

__all__ = [
    "LexSummary",
    "FreqTable",
    "frequency_table",
    "summary",
    "zipf_fit",
    "round_ratio",
    "format_ratio",
]


def round_ratio(num: int, den: int, places: int = 2) -> Decimal:
    """Round ``num/den`` half-up to ``places`` decimals, exactly (no float error)."""
    q = Fraction(num, den)
    exact = Decimal(q.numerator) / Decimal(q.denominator)
    return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def format_ratio(num: int, den: int, places: int = 2, decimal_mark: str = ".") -> str:
    return str(round_ratio(num, den, places)).replace(".", decimal_mark)


@dataclass(frozen=True)
class LexSummary:
    """Counts for one text unit.

    ``hapax_count`` is ``None`` when the summary was built from published
    type/token counts alone.
    """

    type_count: int
    token_count: int
    hapax_count: int | None = None

    def __post_init__(self):
        if self.token_count < 1:
            raise StatsError("empty unit")
        if not 1 <= self.type_count <= self.token_count:
            raise StatsError(
                f"type_count {self.type_count} outside [1, {self.token_count}]"
            )
        if self.hapax_count is not None and not 0 <= self.hapax_count <= self.type_count:
            raise StatsError(f"hapax_count {self.hapax_count} out of range")

    @property
    def ttr(self) -> float:
        return self.type_count / self.token_count

    @property
    def hapax_share(self) -> float | None:
        if self.hapax_count is None:
            return None
        return self.hapax_count / self.type_count

    def ttr_display(self, decimal_mark: str = ".") -> str:
        return format_ratio(self.type_count, self.token_count, decimal_mark=decimal_mark)

    def to_dict(self) -> dict:
        return {
            "type_count": self.type_count,
            "token_count": self.token_count,
            "ttr": self.ttr,
            "hapax_count": self.hapax_count,
            "hapax_share": self.hapax_share,
        }


@dataclass(frozen=True)
class FreqTable:
    entries: dict[str, int]
    ranked: list[tuple[int, str, int]]

    @property
    def token_count(self) -> int:
        return sum(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def rank_frequency(self) -> list[tuple[int, int]]:
        return [(rank, freq) for rank, _, freq in self.ranked]


def frequency_table(tokens) -> FreqTable:
    """Count tokens and rank types by descending frequency.

    Ties are broken by code-point order of the type, so ranks run
    1, 2, 3, ... without sharing.
    """
    counts = Counter(tokens)
    if not counts:
        raise StatsError("empty unit")
    order = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ranked = [(i, w, f) for i, (w, f) in enumerate(order, start=1)]
    return FreqTable(entries=dict(counts), ranked=ranked)


def summary(tokens) -> LexSummary:
    counts = Counter(tokens)
    if not counts:
        raise StatsError("empty unit")
    return LexSummary(
        type_count=len(counts),
        token_count=sum(counts.values()),
        hapax_count=sum(1 for f in counts.values() if f == 1),
    )


def zipf_fit(table: FreqTable) -> PowerFit:
    """Fit ``frequency = C * rank**b`` over every ranked type (``b`` < 0 for text)."""
    points = table.rank_frequency()
    if len(points) < 2:
        raise FitError(f"need at least 2 ranked types, got {len(points)}")
    if len({f for _, f in points}) < 2:
        raise FitError("all frequencies equal; rank-frequency slope undefined")
    return power_fit(points)
