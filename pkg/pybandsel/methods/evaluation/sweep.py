import logging
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from ...exceptions import InvalidSelectionConfig
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import SelectionConfig
from ...types import SelectionReport
from ...types import SplitAssignment
from ...types import SweepRow

py_logger = logging.getLogger('pybandsel')


class Sweep(Scaffold):
    def sweep(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        thresholds: Sequence[float],
        config: SelectionConfig,
        split: Optional[SplitAssignment] = None,
        snapshots: Optional[Sequence[int]] = None,
        evaluate: bool = True,
    ) -> Tuple[List[SweepRow], List[SelectionReport]]:
        """One greedy run per threshold, evaluated at prefix snapshots.

        ``snapshots`` lists retained-band counts to evaluate; by default
        every acceptance is a snapshot. Counts larger than the selection
        are skipped.
        """
        if not thresholds:
            raise InvalidSelectionConfig('At least one threshold is needed')
        if evaluate and split is None:
            raise InvalidSelectionConfig('Evaluation needs a split')
        ranking = self.rank_bands(cube, gt, config)
        accuracies: Dict[Tuple[int, ...], float] = {}
        rows: List[SweepRow] = []
        reports: List[SelectionReport] = []
        for threshold in thresholds:
            report = self.greedy_select(
                cube,
                gt,
                config.with_threshold(threshold),
                ranking=ranking,
            )
            reports.append(report)
            n_selected = len(report.selected)
            if snapshots:
                sizes = sorted({n for n in snapshots if 1 <= n <= n_selected})
            else:
                sizes = list(range(1, n_selected + 1))
            for size in sizes:
                subset = report.snapshot(size)
                accuracy = None
                if evaluate:
                    key = tuple(sorted(subset))
                    if key not in accuracies:
                        accuracies[key] = self.evaluate_subset(
                            cube,
                            gt,
                            subset,
                            split,
                        ).accuracy_percent
                    accuracy = accuracies[key]
                rows.append(SweepRow(threshold, size, subset, accuracy))
            py_logger.info(
                f'Th={threshold}: {n_selected} bands retained, '
                f'{len(sizes)} snapshots',
            )
        py_logger.debug('Memory after sweep: %d bytes', self.memory_usage)
        return rows, reports
