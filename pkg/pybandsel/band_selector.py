import logging
from concurrent.futures import ThreadPoolExecutor

import psutil

from .environment import Environment
from .methods import Methods
from .scaffold import Scaffold
from .statictypes import statictypes
from .types import Cache

py_logger = logging.getLogger('pybandsel')


class BandSelector(Methods, Scaffold):
    WORKERS = min(32, (psutil.cpu_count() or 0) + 4)
    CACHE_ENTRIES = 1024

    @statictypes
    def __init__(
        self,
        workers: int = WORKERS,
        cache_entries: int = CACHE_ENTRIES,
    ):
        super().__init__()
        self._env_checker = Environment()
        self._env_checker.check_environment()
        self.workers = max(1, workers)
        self._quantized_cache = Cache(cache_entries)
        self.executor = ThreadPoolExecutor(
            self.workers,
            thread_name_prefix='BandWorker',
        ) if self.workers > 1 else None
        py_logger.debug('BandSelector started with %d workers', self.workers)

    @property
    def quantized_cache(self) -> Cache:
        return self._quantized_cache

    def close(self):
        if self.executor is not None:
            self.executor.shutdown(wait=True)
            self.executor = None

    def __enter__(self):
        return self

    def __exit__(self, *_):
        self.close()
