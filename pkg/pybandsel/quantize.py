import numpy as np

from .exceptions import EmptyBand
from .exceptions import InvalidLevels
from .types import QuantizedBand


def round_half_up_ratio(numerator, denominator):
    """``floor(numerator / denominator + 1/2)`` on non-negative integers.

    Exact integer arithmetic, so halves always round up.
    """
    numerator = np.asarray(numerator, dtype=np.int64)
    return (2 * numerator + denominator) // (2 * denominator)


def quantize_band(band, levels: int) -> QuantizedBand:
    if levels < 2:
        raise InvalidLevels(levels)
    band = np.asarray(band)
    if band.size == 0:
        raise EmptyBand()
    if band.ndim == 1:
        band = band.reshape(1, -1)
    band = band.astype(np.int64)
    lo = int(band.min())
    span = int(band.max()) - lo
    if span == 0:
        return QuantizedBand(np.zeros(band.shape, dtype=np.int64), levels)
    return QuantizedBand(
        round_half_up_ratio((band - lo) * (levels - 1), span),
        levels,
    )
