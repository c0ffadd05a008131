import logging
from typing import List
from typing import Tuple

from ...exceptions import NoLabeledPixels
from ...glcm_texture import glcm
from ...glcm_texture import homogeneity
from ...info_metrics import mutual_information_between
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import QuantizedBand
from ...types import RankingCriterion
from ...types import SelectionConfig

py_logger = logging.getLogger('pybandsel')


class RankBands(Scaffold):
    def estimate_mutual_information(
        self,
        estimate: QuantizedBand,
        gt: GroundTruthMap,
        config: SelectionConfig,
    ) -> float:
        mask = None
        if config.labeled_only:
            mask = gt.labeled_mask
            if not mask.any():
                raise NoLabeledPixels()
        return mutual_information_between(
            estimate.flat,
            gt.flat,
            estimate.levels,
            gt.levels,
            mask,
        )

    def band_score(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        band: int,
        config: SelectionConfig,
    ) -> float:
        if config.criterion is RankingCriterion.HOMOGENEITY:
            return homogeneity(
                glcm(
                    self.quantized_band(cube, band, config.glcm.levels),
                    config.glcm,
                ),
            )
        return self.estimate_mutual_information(
            self.quantized_band(cube, band, config.levels),
            gt,
            config,
        )

    def rank_bands(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        config: SelectionConfig,
    ) -> Tuple[List[int], List[float]]:
        gt.check_pairing(cube)
        py_logger.info(
            f'Ranking {cube.bands} bands by {config.criterion.value} '
            f'on {self.workers} workers',
        )
        scores = self._map(
            lambda band: self.band_score(cube, gt, band, config),
            range(cube.bands),
        )
        ordering = sorted(range(cube.bands), key=lambda b: (-scores[b], b))
        py_logger.debug(
            'Top band %d (score %.6f), bottom band %d (score %.6f)',
            ordering[0],
            scores[ordering[0]],
            ordering[-1],
            scores[ordering[-1]],
        )
        return ordering, scores
