import hashlib
from typing import Optional

import numpy as np

from ...exceptions import BandIndexOutOfRange
from ...exceptions import ShapeMismatch
from ...exceptions import UnsupportedFormat
from ..py_object import PyObject


class Cube(PyObject):
    """Band-sequential stack of unsigned 16-bit images.

    ``data`` is indexed as ``[band, row, col]`` and is read-only once the
    cube exists, so a single instance can be shared between workers.
    """

    def __init__(self, data: np.ndarray):
        data = np.asarray(data)
        if data.ndim != 3:
            raise ShapeMismatch(
                f'Cube data must be 3-D (bands, rows, cols), '
                f'got {data.ndim}-D',
            )
        if min(data.shape) < 1:
            raise ShapeMismatch(
                f'Cube dimensions must be positive, got {data.shape}',
            )
        if data.dtype != np.uint16:
            if data.dtype.kind not in 'iu' or \
                    data.min() < 0 or data.max() > 0xFFFF:
                raise UnsupportedFormat(
                    'data type',
                    str(data.dtype),
                    'unsigned 16-bit',
                )
        self._data = np.array(data, dtype=np.uint16, order='C')
        self._data.setflags(write=False)
        self._fingerprint: Optional[str] = None
        self.bands, self.rows, self.cols = self._data.shape

    @classmethod
    def from_samples(
        cls,
        bands: int,
        rows: int,
        cols: int,
        samples,
    ) -> 'Cube':
        samples = np.asarray(samples)
        if samples.size != bands * rows * cols:
            raise ShapeMismatch(
                f'{samples.size} samples cannot fill '
                f'{bands}x{rows}x{cols}',
            )
        return cls(samples.reshape(bands, rows, cols))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def samples(self) -> np.ndarray:
        return self._data.reshape(-1)

    @property
    def shape(self):
        return self._data.shape

    def band(self, index: int) -> np.ndarray:
        if not 0 <= index < self.bands:
            raise BandIndexOutOfRange(index, self.bands)
        return self._data[index]

    def pixels(self, subset) -> np.ndarray:
        """Spectral vectors of every pixel, restricted to ``subset``.

        Rows follow the row-major flat pixel index.
        """
        for b in subset:
            if not 0 <= b < self.bands:
                raise BandIndexOutOfRange(b, self.bands)
        return self._data[list(subset)].reshape(len(subset), -1).T

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            self._fingerprint = hashlib.sha1(
                self._data.tobytes(),
            ).hexdigest()
        return self._fingerprint

    def __eq__(self, other):
        if not isinstance(other, Cube):
            return NotImplemented
        return self.shape == other.shape and \
            np.array_equal(self._data, other._data)

    def __hash__(self):
        return hash(self.fingerprint)
