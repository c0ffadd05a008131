from .greedy_select import GreedySelect
from .rank_bands import RankBands
from .replay_trace import ReplayTrace
from .update_estimate import UpdateEstimate


class Selection(
    GreedySelect,
    RankBands,
    ReplayTrace,
    UpdateEstimate,
):
    pass
