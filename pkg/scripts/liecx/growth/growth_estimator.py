"""Rate of growth of a dimension series

gamma(V) is the smallest c with dim V_t <= K t^(c-1). A finite series cannot
certify a limit, so the estimate fits the slope of log S(T) against log T,
where S(T) is the partial sum of dims up to T, over the upper half of the
series. Partial sums smooth out sparse series such as 0,0,1,1,0,0,1,1,...
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from liecx.errors import InsufficientDataError
from liecx.validators.input_validator import require_nonnegative
from liecx.words.dim_series import DimSeries

MIN_SERIES_LENGTH = 16
MIN_FIT_DEGREE = 8
TIE_TOLERANCE = 1e-9
LOOSE_FIT = 0.25


@dataclass(frozen=True)
class GammaEstimate:
    gamma: int
    slope: float
    window: Tuple[int, int]
    confidence_note: str = ""

    def to_dict(self) -> dict:
        """JSON-ready form"""
        return {
            "gamma": self.gamma,
            "slope": self.slope,
            "window": list(self.window),
            "note": self.confidence_note,
        }


def fit_window(length: int) -> Tuple[int, int]:
    """Degrees [t_lo, t_hi) used by the slope fit for a series of this length"""
    return max(MIN_FIT_DEGREE, length // 2), length


def gamma_estimate(series: DimSeries) -> GammaEstimate:
    """Estimate the rate of growth of a dimension series"""
    length = len(series)
    if length < MIN_SERIES_LENGTH:
        raise InsufficientDataError(
            f"need at least {MIN_SERIES_LENGTH} degrees to estimate growth, got {length}"
        )
    dims = np.array([float(d) for d in series.dims])
    partial_sums = np.cumsum(dims)
    t_lo, t_hi = fit_window(length)
    degrees = np.arange(t_lo, t_hi, dtype=float)
    sums = partial_sums[t_lo:t_hi]

    if not np.any(dims[t_lo:]):
        note = "degenerate: series vanishes on the fit window, bounded growth assumed"
        if not np.any(dims):
            note = "degenerate: series is identically zero"
        return GammaEstimate(1, 0.0, (t_lo, t_hi), note)

    usable = sums > 0
    if usable.sum() < 2:
        return GammaEstimate(1, 0.0, (t_lo, t_hi), "degenerate: fewer than two nonzero partial sums")
    slope = float(np.polyfit(np.log(degrees[usable]), np.log(sums[usable]), 1)[0])

    notes = []
    # half-integers round up
    gamma = math.floor(slope + 0.5)
    if abs(slope - math.floor(slope) - 0.5) < TIE_TOLERANCE:
        notes.append("tie: slope is a half-integer, rounded up")
    if gamma < 1:
        notes.append(f"slope {slope:.4f} below 1, clamped to gamma = 1")
        gamma = 1
    elif abs(slope - gamma) > LOOSE_FIT:
        notes.append(f"loose fit: slope {slope:.4f} is far from an integer")
    return GammaEstimate(gamma, slope, (t_lo, t_hi), "; ".join(notes))


def shift_series(series: DimSeries, i: int) -> DimSeries:
    """The i-fold suspension: dims move up by i degrees, zeros below degree i"""
    require_nonnegative(i, "shift")
    if i == 0:
        return series
    return DimSeries(series.p, f"{series.label} shifted by {i}", (0,) * i + series.dims)
