from ...exceptions import LevelMismatch
from ...exceptions import ShapeMismatch
from ...quantize import round_half_up_ratio
from ...scaffold import Scaffold
from ...types import GtEstimate
from ...types import QuantizedBand


class UpdateEstimate(Scaffold):
    @staticmethod
    def update_estimate(est: GtEstimate, band: QuantizedBand) -> GtEstimate:
        if est.values.shape != band.values.shape:
            raise ShapeMismatch(
                f'Estimate is {est.rows}x{est.cols} but band is '
                f'{band.rows}x{band.cols}',
            )
        if est.levels != band.levels:
            raise LevelMismatch(est.levels, band.levels)
        return GtEstimate(
            round_half_up_ratio(est.values + band.values, 2),
            est.levels,
        )
