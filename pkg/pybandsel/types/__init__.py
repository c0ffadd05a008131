from .cache import Cache
from .data import Cube
from .data import GroundTruthMap
from .data import QuantizedBand
from .data import SyntheticSpec
from .evaluation import EvaluationResult
from .evaluation import SnapshotPreset
from .evaluation import SplitAssignment
from .evaluation import SweepRow
from .evaluation import ThresholdPreset
from .metrics import CooccurrenceMatrix
from .metrics import GlcmParams
from .metrics import Histogram
from .metrics import JointHistogram
from .run_manifest import RunManifest
from .selection import GtEstimate
from .selection import RankingCriterion
from .selection import SelectionConfig
from .selection import SelectionReport
from .selection import TraceEntry

__all__ = (
    'Cache',
    'CooccurrenceMatrix',
    'Cube',
    'EvaluationResult',
    'GlcmParams',
    'GroundTruthMap',
    'GtEstimate',
    'Histogram',
    'JointHistogram',
    'QuantizedBand',
    'RankingCriterion',
    'RunManifest',
    'SelectionConfig',
    'SelectionReport',
    'SnapshotPreset',
    'SplitAssignment',
    'SweepRow',
    'SyntheticSpec',
    'ThresholdPreset',
    'TraceEntry',
)
