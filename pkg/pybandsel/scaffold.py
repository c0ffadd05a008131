from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple


class Scaffold:
    def __init__(self):
        self._env_checker = None
        self._quantized_cache = None
        self.executor = None
        self.workers = None

    def _map(self, func: Callable, items: Iterable) -> List:
        pass

    def quantized_band(self, cube, band: int, levels: int):
        pass

    def band_score(self, cube, gt, band: int, config) -> float:
        pass

    def estimate_mutual_information(self, estimate, gt, config) -> float:
        pass

    def rank_bands(self, cube, gt, config) -> Tuple[List[int], List[float]]:
        pass

    def update_estimate(self, est, band):
        pass

    def greedy_select(
        self,
        cube,
        gt,
        config,
        ranking: Optional[Tuple[List[int], List[float]]] = None,
    ):
        pass

    def stratified_split(self, gt, fraction: float = 0.5, seed: int = 0):
        pass

    def classify_1nn(self, cube, subset: Sequence[int], split, gt):
        pass

    def overall_accuracy(self, predictions, truth) -> float:
        pass

    def evaluate_subset(self, cube, gt, subset: Sequence[int], split):
        pass

    @property
    def memory_usage(self) -> int:
        pass
