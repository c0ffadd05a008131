from .classify_1nn import Classify1NN
from .evaluate_subset import EvaluateSubset
from .export_split import ExportSplit
from .overall_accuracy import OverallAccuracy
from .stratified_split import StratifiedSplit
from .sweep import Sweep


class Evaluation(
    Classify1NN,
    EvaluateSubset,
    ExportSplit,
    OverallAccuracy,
    StratifiedSplit,
    Sweep,
):
    pass
