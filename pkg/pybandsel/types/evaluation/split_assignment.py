import numpy as np

from ..py_object import PyObject


class SplitAssignment(PyObject):
    """Disjoint train/test sets of flat (row-major) pixel indices."""

    def __init__(
        self,
        train,
        test,
        seed: int,
        fraction: float = 0.5,
    ):
        self._train = np.sort(np.asarray(train, dtype=np.int64))
        self._test = np.sort(np.asarray(test, dtype=np.int64))
        self._train.setflags(write=False)
        self._test.setflags(write=False)
        self.seed = seed
        self.fraction = fraction

    @property
    def train(self) -> np.ndarray:
        return self._train

    @property
    def test(self) -> np.ndarray:
        return self._test

    def __eq__(self, other):
        if not isinstance(other, SplitAssignment):
            return NotImplemented
        return self.seed == other.seed and \
            self.fraction == other.fraction and \
            np.array_equal(self._train, other._train) and \
            np.array_equal(self._test, other._test)

    __hash__ = None
