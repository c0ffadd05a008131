import numpy as np

from ..py_object import PyObject


class Histogram(PyObject):
    def __init__(self, counts):
        self._counts = np.array(counts, dtype=np.int64)
        self._counts.setflags(write=False)
        self.levels = int(self._counts.size)
        self.total = int(self._counts.sum())

    @property
    def counts(self) -> np.ndarray:
        return self._counts
