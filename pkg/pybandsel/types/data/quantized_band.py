import numpy as np

from ...exceptions import InvalidLevels
from ...exceptions import ShapeMismatch
from ...exceptions import SymbolOutOfRange
from ..py_object import PyObject


class QuantizedBand(PyObject):
    def __init__(self, values, levels: int):
        if levels < 2:
            raise InvalidLevels(levels)
        values = np.asarray(values)
        if values.ndim != 2:
            raise ShapeMismatch(
                f'Quantized band must be 2-D, got {values.ndim}-D',
            )
        if values.size:
            lo, hi = int(values.min()), int(values.max())
            if lo < 0 or hi >= levels:
                raise SymbolOutOfRange(lo if lo < 0 else hi, levels)
        self._values = np.array(values, dtype=np.int64)
        self._values.setflags(write=False)
        self.levels = levels
        self.rows, self.cols = self._values.shape

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def flat(self) -> np.ndarray:
        return self._values.reshape(-1)

    def __eq__(self, other):
        if not isinstance(other, QuantizedBand):
            return NotImplemented
        return self.levels == other.levels and \
            np.array_equal(self._values, other._values)

    __hash__ = None
