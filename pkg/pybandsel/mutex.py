from functools import wraps


def mutex(method):
    """Serialise calls to ``method`` on the instance's ``_lock``."""
    @wraps(method)
    def locked(self, *args, **kwargs):
        with self._lock:
            return method(self, *args, **kwargs)
    return locked
