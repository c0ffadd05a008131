import numpy as np

from ..py_object import PyObject


class CooccurrenceMatrix(PyObject):
    def __init__(self, probs):
        self._probs = np.array(probs, dtype=np.float64)
        self._probs.setflags(write=False)
        self.levels = int(self._probs.shape[0])

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    def __eq__(self, other):
        if not isinstance(other, CooccurrenceMatrix):
            return NotImplemented
        return np.array_equal(self._probs, other._probs)

    __hash__ = None
