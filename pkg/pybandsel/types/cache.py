import threading
from collections import OrderedDict
from typing import Any
from typing import Hashable
from typing import Optional

from ..mutex import mutex


class Cache:
    """Bounded least-recently-used store shared by worker threads."""

    def __init__(self, max_entries: int = 0):
        self._store: 'OrderedDict[Hashable, Any]' = OrderedDict()
        self._max_entries = max_entries
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @mutex
    def get(self, key: Hashable) -> Optional[Any]:
        if key in self._store:
            self.hits += 1
            self._store.move_to_end(key)
            return self._store[key]
        self.misses += 1
        return None

    @mutex
    def put(self, key: Hashable, data: Any) -> None:
        self._store[key] = data
        self._store.move_to_end(key)
        if self._max_entries and len(self._store) > self._max_entries:
            self._store.popitem(last=False)

    @property
    def keys(self):
        return list(self._store)

    @mutex
    def pop(self, key: Hashable) -> Optional[Any]:
        return self._store.pop(key, None)

    @mutex
    def clear(self) -> None:
        self._store.clear()
