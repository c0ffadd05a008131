import psutil

from ...scaffold import Scaffold


class ResourceUsage(Scaffold):
    @property
    def memory_usage(self) -> int:
        """Resident set size of this process, in bytes."""
        return psutil.Process().memory_info().rss
