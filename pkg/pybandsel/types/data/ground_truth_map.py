import numpy as np

from ...exceptions import LabelOutOfRange
from ...exceptions import ShapeMismatch
from ..py_object import PyObject
from .cube import Cube


class GroundTruthMap(PyObject):
    MAX_LABEL = 16
    UNIDENTIFIED = 0

    def __init__(self, labels):
        labels = np.asarray(labels)
        if labels.ndim != 2 or min(labels.shape) < 1:
            raise ShapeMismatch(
                f'Ground truth must be a non-empty 2-D grid, '
                f'got shape {labels.shape}',
            )
        bad = (labels < 0) | (labels > self.MAX_LABEL)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise LabelOutOfRange(int(labels[row, col]), int(row))
        self._labels = np.array(labels, dtype=np.int64)
        self._labels.setflags(write=False)
        self.rows, self.cols = self._labels.shape

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def flat(self) -> np.ndarray:
        return self._labels.reshape(-1)

    @property
    def levels(self) -> int:
        return self.MAX_LABEL + 1

    @property
    def labeled_mask(self) -> np.ndarray:
        return self.flat != self.UNIDENTIFIED

    def check_pairing(self, cube: Cube) -> None:
        if (cube.rows, cube.cols) != (self.rows, self.cols):
            raise ShapeMismatch(
                f'Cube is {cube.rows}x{cube.cols} but ground truth is '
                f'{self.rows}x{self.cols}',
            )

    def __eq__(self, other):
        if not isinstance(other, GroundTruthMap):
            return NotImplemented
        return np.array_equal(self._labels, other._labels)

    __hash__ = None
