import logging
from typing import Tuple

import numpy as np

from .types import Cube
from .types import GroundTruthMap
from .types import SyntheticSpec

py_logger = logging.getLogger('pybandsel')

U16_MAX = 0xFFFF


def block_labels(rows: int, cols: int, n_classes: int) -> np.ndarray:
    """Contiguous row-major blocks of equal size labelled 1..n_classes.

    Pixels left over by the integer division keep label 0.
    """
    n_pixels = rows * cols
    block = n_pixels // n_classes
    labels = np.zeros(n_pixels, dtype=np.int64)
    labels[:block * n_classes] = np.arange(block * n_classes) // block + 1
    return labels.reshape(rows, cols)


def generate_synthetic(spec: SyntheticSpec) -> Tuple[Cube, GroundTruthMap]:
    labels = block_labels(spec.rows, spec.cols, spec.n_classes)
    scaled = (labels * U16_MAX) // spec.n_classes
    rng = np.random.default_rng(spec.seed)
    shape = (spec.rows, spec.cols)
    data = np.empty((spec.bands, spec.rows, spec.cols), dtype=np.uint16)
    for b in spec.signal_bands():
        noisy = scaled + rng.normal(0.0, spec.noise_sigma, size=shape)
        data[b] = np.clip(np.round(noisy), 0, U16_MAX).astype(np.uint16)
    for b in spec.noise_bands():
        data[b] = rng.integers(0, U16_MAX + 1, size=shape, dtype=np.uint16)
    for b in spec.redundant_bands():
        data[b] = data[spec.duplicated_band(b)]
    py_logger.debug(
        'Synthetic cube: %d signal, %d noise, %d redundant bands, seed %d',
        spec.n_signal,
        spec.n_noise,
        spec.n_redundant,
        spec.seed,
    )
    return Cube(data), GroundTruthMap(labels)
