from typing import Optional

import numpy as np

from .exceptions import EmptyHistogram
from .exceptions import EmptyInput
from .exceptions import LengthMismatch
from .exceptions import SymbolOutOfRange
from .types import Histogram
from .types import JointHistogram

# rounding noise tolerated below zero before MI is reported as 0
MI_CLAMP = 1e-12


def _symbols(symbols, levels: int) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if symbols.size == 0:
        raise EmptyInput()
    lo, hi = int(symbols.min()), int(symbols.max())
    if lo < 0:
        raise SymbolOutOfRange(lo, levels)
    if hi >= levels:
        raise SymbolOutOfRange(hi, levels)
    return symbols


def histogram(symbols, levels: int) -> Histogram:
    symbols = _symbols(symbols, levels)
    return Histogram(np.bincount(symbols, minlength=levels))


def joint_histogram(a, b, levels_a: int, levels_b: int) -> JointHistogram:
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    if a.size != b.size:
        raise LengthMismatch(a.size, b.size)
    a = _symbols(a, levels_a)
    b = _symbols(b, levels_b)
    counts = np.bincount(
        a * levels_b + b,
        minlength=levels_a * levels_b,
    )
    return JointHistogram(counts.reshape(levels_a, levels_b))


def entropy(h: Histogram) -> float:
    if h.total <= 0:
        raise EmptyHistogram()
    counts = h.counts[h.counts > 0]
    p = counts / h.total
    return float(-np.sum(p * np.log2(p))) + 0.0


def mutual_information(j: JointHistogram) -> float:
    if j.total <= 0:
        raise EmptyHistogram()
    counts = j.counts
    p_a = counts.sum(axis=1) / j.total
    p_b = counts.sum(axis=0) / j.total
    rows, cols = np.nonzero(counts)
    p_ab = counts[rows, cols] / j.total
    mi = float(np.sum(p_ab * np.log2(p_ab / (p_a[rows] * p_b[cols]))))
    if -MI_CLAMP < mi < 0.0:
        return 0.0
    return mi + 0.0


def mutual_information_between(
    a,
    b,
    levels_a: int,
    levels_b: int,
    mask: Optional[np.ndarray] = None,
) -> float:
    """MI in bits between two symbol grids, optionally over ``mask`` only."""
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    if mask is not None:
        if a.size != mask.size or b.size != mask.size:
            raise LengthMismatch(a.size, mask.size)
        a = a[mask]
        b = b[mask]
    return mutual_information(joint_histogram(a, b, levels_a, levels_b))
