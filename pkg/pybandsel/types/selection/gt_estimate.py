from ..data.quantized_band import QuantizedBand


class GtEstimate(QuantizedBand):
    """Running approximation of the ground truth built from selected bands."""

    @classmethod
    def from_band(cls, band: QuantizedBand) -> 'GtEstimate':
        return cls(band.values, band.levels)
