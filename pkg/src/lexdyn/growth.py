"""Per-fragment tables and cumulative vocabulary-growth curves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import StatsError
from .fitting import PowerFit, power_fit
from .lexstats import LexSummary, summary

__all__ = [
    "CurvePoint",
    "GrowthCurve",
    "fragment_table",
    "cumulative_curve",
    "growth_curve",
    "heaps_fit",
]


@dataclass(frozen=True)
class CurvePoint:
    cum_tokens: int
    cum_types: int

    @property
    def ttr(self) -> float:
        return self.cum_types / self.cum_tokens


@dataclass(frozen=True)
class GrowthCurve:
    """Sequence of (tokens seen, distinct types seen) as a text is read.

    ``granularity`` is ``"fragment"`` for chapter/line-block curves, or the
    integer token step used by :func:`growth_curve`.
    """

    points: list[CurvePoint]
    granularity: str | int = "fragment"
    label: str = field(default="", compare=False)

    def __post_init__(self):
        prev = None
        for p in self.points:
            if not 0 < p.cum_types <= p.cum_tokens:
                raise StatsError(f"invalid curve point {p}")
            if prev is not None and (
                p.cum_tokens <= prev.cum_tokens or p.cum_types < prev.cum_types
            ):
                raise StatsError(f"curve not monotone at {p}")
            prev = p

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @classmethod
    def from_counts(cls, tokens, types, granularity="fragment", label=""):
        return cls(
            [CurvePoint(int(n), int(v)) for n, v in zip(tokens, types, strict=True)],
            granularity=granularity,
            label=label,
        )

    @property
    def cum_tokens(self) -> np.ndarray:
        return np.array([p.cum_tokens for p in self.points], dtype=np.int64)

    @property
    def cum_types(self) -> np.ndarray:
        return np.array([p.cum_types for p in self.points], dtype=np.int64)

    @property
    def ttr(self) -> np.ndarray:
        return np.array([p.ttr for p in self.points])

    @property
    def final(self) -> CurvePoint:
        return self.points[-1]

    def xy(self) -> list[tuple[int, int]]:
        return [(p.cum_tokens, p.cum_types) for p in self.points]

    def rows(self) -> list[dict]:
        return [
            {"cum_tokens": p.cum_tokens, "cum_types": p.cum_types, "ttr": p.ttr}
            for p in self.points
        ]


def fragment_table(fragments) -> list[LexSummary]:
    """Summarize each fragment on its own tokens only."""
    out = []
    for pos, frag in enumerate(fragments, start=1):
        if not frag.tokens:
            raise StatsError(f"fragment {getattr(frag, 'index', pos)} is empty")
        out.append(summary(frag.tokens))
    return out


def cumulative_curve(fragments) -> GrowthCurve:
    """One point per fragment: running token total and size of the running type union."""
    fragments = list(fragments)
    if not fragments:
        raise StatsError("no fragments")
    seen = set()
    n = 0
    points = []
    for pos, frag in enumerate(fragments, start=1):
        if not frag.tokens:
            raise StatsError(f"fragment {getattr(frag, 'index', pos)} is empty")
        seen.update(frag.tokens)
        n += len(frag.tokens)
        points.append(CurvePoint(n, len(seen)))
    return GrowthCurve(points, granularity="fragment")


def growth_curve(tokens, step: int) -> GrowthCurve:
    """Emit a point every ``step`` tokens, plus a final point at the end of text."""
    if step < 1:
        raise StatsError(f"step must be >= 1, got {step}")
    seen = set()
    points = []
    n = 0
    for n, tok in enumerate(tokens, start=1):
        seen.add(tok)
        if n % step == 0:
            points.append(CurvePoint(n, len(seen)))
    if n == 0:
        raise StatsError("empty unit")
    if n % step:
        points.append(CurvePoint(n, len(seen)))
    return GrowthCurve(points, granularity=step)


def heaps_fit(curve: GrowthCurve) -> PowerFit:
    """Power fit of cumulative types against cumulative tokens."""
    return power_fit(curve.xy())
