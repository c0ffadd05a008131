from .cube import Cube
from .ground_truth_map import GroundTruthMap
from .quantized_band import QuantizedBand
from .synthetic_spec import SyntheticSpec

__all__ = (
    'Cube',
    'GroundTruthMap',
    'QuantizedBand',
    'SyntheticSpec',
)
