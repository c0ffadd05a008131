from typing import Tuple

from ...exceptions import InvalidGlcmParams
from ...statictypes import statictypes
from ..py_object import PyObject


class GlcmParams(PyObject):
    @statictypes
    def __init__(
        self,
        levels: int = 8,
        offset: Tuple[int, int] = (0, 1),
        symmetric: bool = True,
    ):
        if levels < 2:
            raise InvalidGlcmParams(
                f'GLCM needs at least 2 gray levels, got {levels}',
            )
        if offset == (0, 0):
            raise InvalidGlcmParams('GLCM offset must not be (0, 0)')
        self.levels = levels
        self.offset = (int(offset[0]), int(offset[1]))
        self.symmetric = bool(symmetric)

    def negated(self) -> 'GlcmParams':
        return GlcmParams(
            self.levels,
            (-self.offset[0], -self.offset[1]),
            self.symmetric,
        )

    def to_dict(self) -> dict:
        return {
            'levels': self.levels,
            'offset': list(self.offset),
            'symmetric': self.symmetric,
        }

    def __eq__(self, other):
        if not isinstance(other, GlcmParams):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.levels, self.offset, self.symmetric))
