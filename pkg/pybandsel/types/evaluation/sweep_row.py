from typing import List
from typing import NamedTuple
from typing import Optional


class SweepRow(NamedTuple):
    threshold: float
    n_bands: int
    bands: List[int]
    accuracy_percent: Optional[float]

    HEADER = ('threshold', 'n_bands', 'bands', 'accuracy_percent')

    def to_csv_row(self) -> List[str]:
        return [
            repr(float(self.threshold)),
            str(self.n_bands),
            ';'.join(str(b) for b in self.bands),
            '' if self.accuracy_percent is None
            else repr(float(self.accuracy_percent)),
        ]
