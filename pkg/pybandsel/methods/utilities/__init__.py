from .inspect_bands import InspectBands
from .parallel import Parallel
from .quantized_band import QuantizedBands
from .resource_usage import ResourceUsage


class Utilities(
    InspectBands,
    Parallel,
    QuantizedBands,
    ResourceUsage,
):
    pass
