import json
from typing import List
from typing import Optional

from ..metrics.glcm_params import GlcmParams
from ..py_object import PyObject
from .ranking_criterion import RankingCriterion
from .selection_config import SelectionConfig
from .trace_entry import TraceEntry


class SelectionReport(PyObject):
    """Outcome of one greedy run.

    ``trace[0]`` records the seed band: it is always accepted, with
    ``mi_before`` 0 and ``mi_after`` the MI of the seed estimate. The
    threshold rule binds ``trace[1:]`` only.
    """

    def __init__(
        self,
        config: SelectionConfig,
        ordering: List[int],
        scores: List[float],
        trace: List[TraceEntry],
        selected: List[int],
        final_mi: float,
    ):
        self.config = config
        self.ordering = ordering
        self.scores = scores
        self.trace = trace
        self.selected = selected
        self.final_mi = final_mi

    @property
    def decisions(self) -> List[TraceEntry]:
        return self.trace[1:]

    def snapshot(self, n_bands: int) -> List[int]:
        return self.selected[:n_bands]

    def to_dict(self) -> dict:
        return {
            'criterion': self.config.criterion.value,
            'threshold': self.json_float(self.config.threshold),
            'levels': self.config.levels,
            'glcm': self.config.glcm.to_dict(),
            'labeled_only': self.config.labeled_only,
            'ordering': list(self.ordering),
            'scores': list(self.scores),
            'trace': [entry.to_dict() for entry in self.trace],
            'selected': list(self.selected),
            'final_mi': self.final_mi,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + '\n'

    @classmethod
    def from_dict(
        cls,
        data: dict,
        max_bands: Optional[int] = None,
    ) -> 'SelectionReport':
        config = SelectionConfig(
            criterion=RankingCriterion.from_name(data['criterion']),
            threshold=float(data['threshold']),
            levels=int(data['levels']),
            glcm=GlcmParams(
                levels=int(data['glcm']['levels']),
                offset=tuple(int(x) for x in data['glcm']['offset']),
                symmetric=bool(data['glcm']['symmetric']),
            ),
            max_bands=max_bands,
            labeled_only=bool(data['labeled_only']),
        )
        return cls(
            config,
            [int(b) for b in data['ordering']],
            [float(s) for s in data['scores']],
            [
                TraceEntry(
                    int(e['band']),
                    float(e['mi_before']),
                    float(e['mi_after']),
                    bool(e['accepted']),
                )
                for e in data['trace']
            ],
            [int(b) for b in data['selected']],
            float(data['final_mi']),
        )

    @classmethod
    def from_json(cls, text: str) -> 'SelectionReport':
        return cls.from_dict(json.loads(text))
