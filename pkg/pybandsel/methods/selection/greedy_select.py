import logging
from typing import List
from typing import Optional
from typing import Tuple

from ...exceptions import EmptyCube
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import GtEstimate
from ...types import SelectionConfig
from ...types import SelectionReport
from ...types import TraceEntry

py_logger = logging.getLogger('pybandsel')


class GreedySelect(Scaffold):
    def greedy_select(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        config: SelectionConfig,
        ranking: Optional[Tuple[List[int], List[float]]] = None,
    ) -> SelectionReport:
        if cube.bands < 1:
            raise EmptyCube()
        gt.check_pairing(cube)
        if ranking is None:
            ranking = self.rank_bands(cube, gt, config)
        ordering, scores = ranking

        seed = ordering[0]
        est = GtEstimate.from_band(
            self.quantized_band(cube, seed, config.levels),
        )
        mi_cur = self.estimate_mutual_information(est, gt, config)
        trace = [TraceEntry(seed, 0.0, mi_cur, True)]
        selected = [seed]

        for band in ordering[1:]:
            if config.max_bands is not None and \
                    len(selected) >= config.max_bands:
                break
            candidate = self.update_estimate(
                est,
                self.quantized_band(cube, band, config.levels),
            )
            mi_new = self.estimate_mutual_information(candidate, gt, config)
            accepted = mi_new - mi_cur > config.threshold
            trace.append(TraceEntry(band, mi_cur, mi_new, accepted))
            py_logger.debug(
                'Band %d %s: MI %.6f -> %.6f',
                band,
                'accepted' if accepted else 'rejected',
                mi_cur,
                mi_new,
            )
            if accepted:
                est = candidate
                mi_cur = mi_new
                selected.append(band)

        py_logger.info(
            f'Selected {len(selected)} of {cube.bands} bands '
            f'(Th={config.threshold}, final MI {mi_cur:.6f} bits)',
        )
        return SelectionReport(
            config,
            list(ordering),
            [float(s) for s in scores],
            trace,
            selected,
            mi_cur,
        )
