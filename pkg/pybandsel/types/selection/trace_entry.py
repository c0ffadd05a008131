from typing import NamedTuple


class TraceEntry(NamedTuple):
    band: int
    mi_before: float
    mi_after: float
    accepted: bool

    @property
    def gain(self) -> float:
        return self.mi_after - self.mi_before

    def to_dict(self) -> dict:
        return {
            'band': self.band,
            'mi_before': self.mi_before,
            'mi_after': self.mi_after,
            'accepted': self.accepted,
        }
