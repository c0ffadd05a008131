import logging

from ...quantize import quantize_band
from ...scaffold import Scaffold
from ...types import Cube
from ...types import QuantizedBand

py_logger = logging.getLogger('pybandsel')


class QuantizedBands(Scaffold):
    def quantized_band(
        self,
        cube: Cube,
        band: int,
        levels: int,
    ) -> QuantizedBand:
        key = (cube.fingerprint, band, levels)
        quantized = self._quantized_cache.get(key)
        if quantized is None:
            quantized = quantize_band(cube.band(band), levels)
            self._quantized_cache.put(key, quantized)
        return quantized
