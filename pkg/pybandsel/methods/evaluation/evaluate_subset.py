import logging
from typing import Sequence

from ...scaffold import Scaffold
from ...types import Cube
from ...types import EvaluationResult
from ...types import GroundTruthMap
from ...types import SplitAssignment

py_logger = logging.getLogger('pybandsel')


class EvaluateSubset(Scaffold):
    def evaluate_subset(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        subset: Sequence[int],
        split: SplitAssignment,
    ) -> EvaluationResult:
        predictions = self.classify_1nn(cube, subset, split, gt)
        accuracy = self.overall_accuracy(predictions, gt.flat[split.test])
        py_logger.debug(
            'Accuracy %.2f%% with %d bands',
            accuracy,
            len(subset),
        )
        return EvaluationResult(
            list(subset),
            accuracy,
            self.CLASSIFIER_NAME,
            split.seed,
        )
