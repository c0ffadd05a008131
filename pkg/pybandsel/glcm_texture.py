import math

import numpy as np
from skimage.feature import graycomatrix
from skimage.feature import graycoprops

from .exceptions import LevelOverflow
from .exceptions import NoPairs
from .quantize import quantize_band
from .types import CooccurrenceMatrix
from .types import GlcmParams
from .types import QuantizedBand


def cooccurrence_counts(values: np.ndarray, params: GlcmParams) -> np.ndarray:
    levels = params.levels
    if values.size and int(values.max()) >= levels:
        raise LevelOverflow(int(values.max()), levels)
    d_row, d_col = params.offset
    rows, cols = values.shape
    if rows <= abs(d_row) or cols <= abs(d_col):
        raise NoPairs(values.shape, params.offset)
    # graycomatrix steps round(sin(angle) * d) rows, round(cos(angle) * d) cols
    counts = graycomatrix(
        np.array(values, dtype=np.int64, order="C"),
        [math.hypot(d_row, d_col)],
        [math.atan2(d_row, d_col)],
        levels=levels,
        symmetric=params.symmetric,
    )
    return counts[:, :, 0, 0].astype(np.int64)


def glcm(image: QuantizedBand, params: GlcmParams) -> CooccurrenceMatrix:
    counts = cooccurrence_counts(image.values, params)
    return CooccurrenceMatrix(counts / counts.sum())


def homogeneity(c: CooccurrenceMatrix) -> float:
    off_diagonal = c.probs[~np.eye(c.levels, dtype=bool)]
    if not np.any(off_diagonal > 0):
        return 1.0
    return float(
        graycoprops(
            c.probs[:, :, np.newaxis, np.newaxis],
            'homogeneity',
        )[0, 0],
    )


def band_homogeneity(band, params: GlcmParams) -> float:
    return homogeneity(glcm(quantize_band(band, params.levels), params))
