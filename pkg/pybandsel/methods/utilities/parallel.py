from typing import Callable
from typing import Iterable
from typing import List

from ...scaffold import Scaffold


class Parallel(Scaffold):
    def _map(self, func: Callable, items: Iterable) -> List:
        """Ordered map, fanned out on the worker pool when there is one."""
        if self.executor is None:
            return [func(item) for item in items]
        return list(self.executor.map(func, items))
