import numpy as np

from ...exceptions import EmptyInput
from ...exceptions import LengthMismatch
from ...scaffold import Scaffold


class OverallAccuracy(Scaffold):
    @staticmethod
    def overall_accuracy(predictions, truth) -> float:
        predictions = np.asarray(predictions).reshape(-1)
        truth = np.asarray(truth).reshape(-1)
        if predictions.size != truth.size:
            raise LengthMismatch(predictions.size, truth.size)
        if predictions.size == 0:
            raise EmptyInput()
        correct = int(np.count_nonzero(predictions == truth))
        return 100.0 * correct / predictions.size
