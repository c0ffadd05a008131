from .evaluation_result import EvaluationResult
from .presets import SnapshotPreset
from .presets import ThresholdPreset
from .split_assignment import SplitAssignment
from .sweep_row import SweepRow

__all__ = (
    'EvaluationResult',
    'SnapshotPreset',
    'SplitAssignment',
    'SweepRow',
    'ThresholdPreset',
)
