"""Power-law regression in log-log space and Pearson correlation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FitError

__all__ = ["PowerFit", "power_fit", "predict", "pearson"]


@dataclass(frozen=True)
class PowerFit:
    """``y = a * x**b`` with goodness of fit ``r2`` measured in log space."""

    a: float
    b: float
    r2: float = 1.0
    n_points: int = 2

    def __post_init__(self):
        if not self.a > 0:
            raise FitError(f"factor a must be positive, got {self.a}")

    def __call__(self, x):
        return predict(self, x)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "r2": self.r2, "n_points": self.n_points}

    @classmethod
    def from_dict(cls, d: dict) -> "PowerFit":
        return cls(
            a=float(d["a"]),
            b=float(d["b"]),
            r2=float(d.get("r2", 1.0)),
            n_points=int(d.get("n_points", 2)),
        )


def _as_xy(points):
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise FitError("points must be a sequence of (x, y) pairs")
    return arr[:, 0], arr[:, 1]


def power_fit(points) -> PowerFit:
    """Fit ``y = a * x**b`` by ordinary least squares of ``ln y`` on ``ln x``.

    ``points`` is any sequence of ``(x, y)`` pairs (or an ``(n, 2)`` array).
    ``b`` is the slope and ``a = exp(intercept)``; ``r2`` is the squared
    Pearson correlation of the logged data, taken as 1 when ``ln y`` is
    constant (the fit is then exact).
    """
    x, y = _as_xy(points)
    if len(x) < 2:
        raise FitError(f"need at least 2 points, got {len(x)}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise FitError("non-finite coordinate")
    if np.any(x <= 0) or np.any(y <= 0):
        raise FitError("log domain")
    if np.all(x == x[0]):
        raise FitError("degenerate abscissa")

    lx = np.log(x)
    ly = np.log(y)
    dx = lx - lx.mean()
    dy = ly - ly.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    sxy = float(dx @ dy)
    if sxx == 0.0:
        raise FitError("degenerate abscissa")
    slope = sxy / sxx
    intercept = ly.mean() - slope * lx.mean()
    if np.all(ly == ly[0]):
        r2 = 1.0
    else:
        r2 = min(1.0, sxy * sxy / (sxx * syy))
    return PowerFit(a=math.exp(intercept), b=slope, r2=r2, n_points=len(x))


def predict(fit: PowerFit, x):
    """Evaluate ``a * x**b``; ``x`` may be a scalar or an array."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0):
        raise FitError("x must be positive")
    out = fit.a * np.power(arr, fit.b)
    return float(out) if out.ndim == 0 else out


def pearson(xs, ys) -> float:
    """Sample Pearson correlation coefficient."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise FitError(f"series length mismatch: {x.shape} vs {y.shape}")
    if len(x) < 2:
        raise FitError("need at least 2 observations")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise FitError("zero variance")
    dx = x - x.mean()
    dy = y - y.mean()
    den = math.sqrt(float(dx @ dx) * float(dy @ dy))
    if den == 0.0:
        raise FitError("zero variance")
    r = float(dx @ dy) / den
    return max(-1.0, min(1.0, r))
