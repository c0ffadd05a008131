from typing import Optional

from ...exceptions import InvalidSelectionConfig
from ...statictypes import statictypes
from ..metrics.glcm_params import GlcmParams
from ..py_object import PyObject
from .ranking_criterion import RankingCriterion


class SelectionConfig(PyObject):
    # 16 classes plus the unidentified label
    DEFAULT_LEVELS = 17

    @statictypes
    def __init__(
        self,
        criterion: RankingCriterion = RankingCriterion.MUTUAL_INFORMATION,
        threshold: float = 0.0,
        levels: int = DEFAULT_LEVELS,
        glcm: Optional[GlcmParams] = None,
        max_bands: Optional[int] = None,
        labeled_only: bool = False,
    ):
        if levels < 2:
            raise InvalidSelectionConfig(
                f'MI quantization needs at least 2 levels, got {levels}',
            )
        if max_bands is not None and max_bands < 1:
            raise InvalidSelectionConfig(
                f'max_bands must be at least 1, got {max_bands}',
            )
        if threshold != threshold:
            raise InvalidSelectionConfig('threshold must not be NaN')
        self.criterion = criterion
        self.threshold = float(threshold)
        self.levels = levels
        self.glcm = glcm if glcm is not None else GlcmParams()
        self.max_bands = max_bands
        self.labeled_only = labeled_only

    def with_threshold(self, threshold: float) -> 'SelectionConfig':
        return SelectionConfig(
            self.criterion,
            threshold,
            self.levels,
            self.glcm,
            self.max_bands,
            self.labeled_only,
        )
