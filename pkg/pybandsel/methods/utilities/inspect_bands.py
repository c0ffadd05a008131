import logging
import math
from typing import List
from typing import NamedTuple
from typing import Sequence

from ...glcm_texture import band_homogeneity
from ...glcm_texture import glcm
from ...glcm_texture import homogeneity
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GlcmParams
from ...types import GroundTruthMap
from ...types import SelectionConfig

py_logger = logging.getLogger('pybandsel')


class BandProfile(NamedTuple):
    band: int
    mi_bits: float
    homogeneity: float


class InspectBands(Scaffold):
    def inspect_bands(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        config: SelectionConfig,
    ) -> List[BandProfile]:
        gt.check_pairing(cube)

        def profile(band: int) -> BandProfile:
            estimate = self.quantized_band(cube, band, config.levels)
            texture = self.quantized_band(cube, band, config.glcm.levels)
            return BandProfile(
                band,
                self.estimate_mutual_information(estimate, gt, config),
                homogeneity(glcm(texture, config.glcm)),
            )

        rows = self._map(profile, range(cube.bands))
        py_logger.debug('Memory after inspection: %d bytes', self.memory_usage)
        return rows

    @staticmethod
    def low_information_bands(
        scores: Sequence[float],
        fraction: float = 0.1,
    ) -> List[int]:
        """Bands in the bottom ``fraction`` of ``scores``, ascending index."""
        count = max(1, math.ceil(round(fraction * len(scores), 9)))
        ranked = sorted(range(len(scores)), key=lambda b: (scores[b], b))
        return sorted(ranked[:count])

    @staticmethod
    def gt_homogeneity(gt: GroundTruthMap, params: GlcmParams) -> float:
        return band_homogeneity(gt.labels, params)
