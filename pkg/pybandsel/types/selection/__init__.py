from .gt_estimate import GtEstimate
from .ranking_criterion import RankingCriterion
from .selection_config import SelectionConfig
from .selection_report import SelectionReport
from .trace_entry import TraceEntry

__all__ = (
    'GtEstimate',
    'RankingCriterion',
    'SelectionConfig',
    'SelectionReport',
    'TraceEntry',
)
