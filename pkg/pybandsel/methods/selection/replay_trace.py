from typing import List
from typing import Tuple

from ...exceptions import EmptyTrace
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import GtEstimate
from ...types import SelectionReport
from ...types import TraceEntry


class ReplayTrace(Scaffold):
    def replay_trace(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        report: SelectionReport,
    ) -> Tuple[List[TraceEntry], GtEstimate]:
        """Recompute every trace entry along the recorded decisions.

        Returns the recomputed entries (``accepted`` re-derived from the
        threshold) and the estimate committed after the last acceptance.
        """
        gt.check_pairing(cube)
        if not report.trace:
            raise EmptyTrace()
        config = report.config
        seed = report.trace[0].band
        est = GtEstimate.from_band(
            self.quantized_band(cube, seed, config.levels),
        )
        mi_cur = self.estimate_mutual_information(est, gt, config)
        replayed = [TraceEntry(seed, 0.0, mi_cur, True)]
        for entry in report.trace[1:]:
            candidate = self.update_estimate(
                est,
                self.quantized_band(cube, entry.band, config.levels),
            )
            mi_new = self.estimate_mutual_information(candidate, gt, config)
            replayed.append(
                TraceEntry(
                    entry.band,
                    mi_cur,
                    mi_new,
                    mi_new - mi_cur > config.threshold,
                ),
            )
            if entry.accepted:
                est = candidate
                mi_cur = mi_new
        return replayed, est

    def verify_report(
        self,
        cube: Cube,
        gt: GroundTruthMap,
        report: SelectionReport,
        tolerance: float = 1e-12,
    ) -> List[str]:
        if not report.trace:
            return [str(EmptyTrace())]
        problems = []
        if not report.trace[0].accepted:
            problems.append('Seed entry is not marked accepted')
        replayed, _ = self.replay_trace(cube, gt, report)
        for i, (recorded, fresh) in enumerate(zip(report.trace, replayed)):
            if abs(recorded.mi_before - fresh.mi_before) > tolerance or \
                    abs(recorded.mi_after - fresh.mi_after) > tolerance:
                problems.append(
                    f'Entry {i} (band {recorded.band}) records MI '
                    f'{recorded.mi_before!r} -> {recorded.mi_after!r}, '
                    f'replay gives {fresh.mi_before!r} -> '
                    f'{fresh.mi_after!r}',
                )
            if i and recorded.accepted != (
                recorded.gain > report.config.threshold
            ):
                problems.append(
                    f'Entry {i} (band {recorded.band}) decision contradicts '
                    f'threshold {report.config.threshold}',
                )
        accepted = [e for e in report.trace if e.accepted]
        if [e.band for e in accepted] != report.selected:
            problems.append('Accepted trace entries differ from selection')
        if not accepted:
            problems.append('No accepted trace entries')
        elif abs(accepted[-1].mi_after - report.final_mi) > tolerance:
            problems.append('final_mi differs from the last accepted entry')
        return problems
