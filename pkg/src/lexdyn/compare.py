"""Source/translation comparison and cohort dispersion of Heaps coefficients."""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from .errors import CompareError
from .fitting import PowerFit, pearson
from .growth import GrowthCurve, heaps_fit
from .lexstats import LexSummary

__all__ = [
    "PairReport",
    "LevellingReport",
    "compare_pair",
    "compare_tables",
    "fit_deltas",
    "levelling_out",
    "length_ratio",
    "CROSS_PAIR_CAVEAT",
]

CROSS_PAIR_CAVEAT = (
    "high TTR correlation is not specific to a source/translation pair: "
    "mismatched pairs of fiction texts correlate just as strongly"
)


@dataclass(frozen=True)
class PairReport:
    """Comparison of a source text with its translation.

    ``source_fit``/``target_fit`` and the deltas are ``None`` when the inputs
    were per-fragment tables without cumulative type counts.
    """

    ttr_correlation: float
    token_ratio: float
    source_fit: PowerFit | None = None
    target_fit: PowerFit | None = None
    n_points: int = 0
    series: str = "cumulative"
    caveat: str = CROSS_PAIR_CAVEAT

    @property
    def delta_a(self) -> float | None:
        if self.source_fit is None or self.target_fit is None:
            return None
        return self.target_fit.a - self.source_fit.a

    @property
    def delta_b(self) -> float | None:
        if self.source_fit is None or self.target_fit is None:
            return None
        return self.target_fit.b - self.source_fit.b

    def to_dict(self) -> dict:
        return {
            "ttr_correlation": self.ttr_correlation,
            "token_ratio": self.token_ratio,
            "source_fit": self.source_fit.to_dict() if self.source_fit else None,
            "target_fit": self.target_fit.to_dict() if self.target_fit else None,
            "delta_a": self.delta_a,
            "delta_b": self.delta_b,
            "n_points": self.n_points,
            "series": self.series,
            "caveat": self.caveat,
        }


@dataclass(frozen=True)
class LevellingReport:
    spread_source_a: float
    spread_target_a: float
    spread_source_b: float
    spread_target_b: float
    sd_source_a: float | None = None
    sd_target_a: float | None = None
    sd_source_b: float | None = None
    sd_target_b: float | None = None
    cohort_size: int = 0

    @property
    def spread_ratio_a(self) -> float | None:
        if self.spread_source_a == 0:
            return None
        return self.spread_target_a / self.spread_source_a

    @property
    def spread_ratio_b(self) -> float | None:
        if self.spread_source_b == 0:
            return None
        return self.spread_target_b / self.spread_source_b

    @property
    def consistent_with_levelling(self) -> bool | None:
        """Both ratios below 1. This is a descriptive flag, not a test."""
        ra, rb = self.spread_ratio_a, self.spread_ratio_b
        if ra is None or rb is None:
            return None
        return ra < 1 and rb < 1

    def to_dict(self) -> dict:
        return {
            "cohort_size": self.cohort_size,
            "spread_source_a": self.spread_source_a,
            "spread_target_a": self.spread_target_a,
            "spread_ratio_a": self.spread_ratio_a,
            "spread_source_b": self.spread_source_b,
            "spread_target_b": self.spread_target_b,
            "spread_ratio_b": self.spread_ratio_b,
            "sd_source_a": self.sd_source_a,
            "sd_target_a": self.sd_target_a,
            "sd_source_b": self.sd_source_b,
            "sd_target_b": self.sd_target_b,
            "spread_ratios_below_one": self.consistent_with_levelling,
        }


def compare_pair(source_curve: GrowthCurve, target_curve: GrowthCurve) -> PairReport:
    """Correlate index-aligned cumulative TTR series and fit Heaps' law to both."""
    if len(source_curve) != len(target_curve):
        raise CompareError(
            f"point-count mismatch: {len(source_curve)} vs {len(target_curve)}"
        )
    if len(source_curve) < 3:
        raise CompareError(f"need at least 3 aligned points, got {len(source_curve)}")
    return PairReport(
        ttr_correlation=pearson(source_curve.ttr, target_curve.ttr),
        token_ratio=target_curve.final.cum_tokens / source_curve.final.cum_tokens,
        source_fit=heaps_fit(source_curve),
        target_fit=heaps_fit(target_curve),
        n_points=len(source_curve),
    )


def compare_tables(
    source_rows: list[LexSummary],
    target_rows: list[LexSummary],
    source_whole: LexSummary | None = None,
    target_whole: LexSummary | None = None,
) -> PairReport:
    """Pair report from per-fragment tables (chapter k against translated chapter k).

    Without cumulative type counts no Heaps fit is possible, so only the
    per-fragment TTR correlation and the token ratio are reported. The
    token ratio uses the whole-text rows when given, else the fragment sums.
    """
    if len(source_rows) != len(target_rows):
        raise CompareError(
            f"fragment-count mismatch: {len(source_rows)} vs {len(target_rows)}"
        )
    if len(source_rows) < 3:
        raise CompareError(f"need at least 3 aligned fragments, got {len(source_rows)}")
    src_tokens = (
        source_whole.token_count if source_whole else sum(r.token_count for r in source_rows)
    )
    tgt_tokens = (
        target_whole.token_count if target_whole else sum(r.token_count for r in target_rows)
    )
    return PairReport(
        ttr_correlation=pearson([r.ttr for r in source_rows], [r.ttr for r in target_rows]),
        token_ratio=tgt_tokens / src_tokens,
        n_points=len(source_rows),
        series="fragment",
    )


def fit_deltas(source_fit: PowerFit, target_fit: PowerFit) -> tuple[float, float]:
    """``(target.a - source.a, target.b - source.b)``."""
    return target_fit.a - source_fit.a, target_fit.b - source_fit.b


def _spread(values) -> float:
    return max(values) - min(values)


def levelling_out(source_fits, target_fits) -> LevellingReport:
    """Range (max - min) of each Heaps coefficient within each cohort.

    Standard deviations are added for cohorts of three or more.
    """
    source_fits = list(source_fits)
    target_fits = list(target_fits)
    if len(source_fits) < 2 or len(target_fits) < 2:
        raise CompareError("each cohort needs at least 2 fits")
    if len(source_fits) != len(target_fits):
        raise CompareError(
            f"cohort size mismatch: {len(source_fits)} vs {len(target_fits)}"
        )
    sa = [f.a for f in source_fits]
    ta = [f.a for f in target_fits]
    sb = [f.b for f in source_fits]
    tb = [f.b for f in target_fits]
    sd = statistics.stdev if len(sa) >= 3 else (lambda _: None)
    return LevellingReport(
        spread_source_a=_spread(sa),
        spread_target_a=_spread(ta),
        spread_source_b=_spread(sb),
        spread_target_b=_spread(tb),
        sd_source_a=sd(sa),
        sd_target_a=sd(ta),
        sd_source_b=sd(sb),
        sd_target_b=sd(tb),
        cohort_size=len(sa),
    )


def length_ratio(source: LexSummary, target: LexSummary) -> float:
    return target.token_count / source.token_count
