import numpy as np

from ..py_object import PyObject
from .histogram import Histogram


class JointHistogram(PyObject):
    """Counts of co-observed symbol pairs, ``counts[i, j]`` for a=i, b=j."""

    def __init__(self, counts):
        self._counts = np.array(counts, dtype=np.int64)
        self._counts.setflags(write=False)
        self.levels_a, self.levels_b = self._counts.shape
        self.total = int(self._counts.sum())

    @property
    def counts(self) -> np.ndarray:
        return self._counts

    @property
    def marginal_a(self) -> Histogram:
        return Histogram(self._counts.sum(axis=1))

    @property
    def marginal_b(self) -> Histogram:
        return Histogram(self._counts.sum(axis=0))

    def flattened(self) -> Histogram:
        return Histogram(self._counts.reshape(-1))

    def transposed(self) -> 'JointHistogram':
        return JointHistogram(self._counts.T)
