from typing import List

from ..py_object import PyObject


class EvaluationResult(PyObject):
    def __init__(
        self,
        subset: List[int],
        accuracy_percent: float,
        classifier: str,
        seed: int,
    ):
        self.subset = list(subset)
        self.n_bands = len(self.subset)
        self.accuracy_percent = accuracy_percent
        self.classifier = classifier
        self.seed = seed

    def __eq__(self, other):
        if not isinstance(other, EvaluationResult):
            return NotImplemented
        return vars(self) == vars(other)

    __hash__ = None
