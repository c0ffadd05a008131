import json
import math

import numpy as np
import pytest

from pybandsel import BandSelector
from pybandsel import generate_synthetic
from pybandsel import quantize_band
from pybandsel.exceptions import EmptyTrace
from pybandsel.exceptions import InvalidSelectionConfig
from pybandsel.exceptions import LevelMismatch
from pybandsel.exceptions import ShapeMismatch
from pybandsel.types import Cube
from pybandsel.types import GroundTruthMap
from pybandsel.types import GtEstimate
from pybandsel.types import QuantizedBand
from pybandsel.types import RankingCriterion
from pybandsel.types import SelectionConfig
from pybandsel.types import SelectionReport
from pybandsel.types import SyntheticSpec

MI = RankingCriterion.MUTUAL_INFORMATION
HOMOGENEITY = RankingCriterion.HOMOGENEITY


def assert_acceptance_rule(report: SelectionReport):
    assert report.trace[0].accepted
    assert report.trace[0].band == report.ordering[0] == report.selected[0]
    for entry in report.decisions:
        assert entry.accepted == (entry.gain > report.config.threshold)
    assert report.selected == [e.band for e in report.trace if e.accepted]
    upper = math.log2(report.config.levels)
    for entry in report.trace:
        assert 0.0 <= entry.mi_after <= upper + 1e-12


class TestRankBands:
    def test_signal_before_noise(self, selector):
        spec = SyntheticSpec(32, 32, 4, n_signal=1, n_noise=1, seed=2)
        cube, gt = generate_synthetic(spec)
        ordering, scores = selector.rank_bands(cube, gt, SelectionConfig())
        assert ordering == [0, 1]
        assert scores[0] > scores[1]

    def test_ties_keep_band_order(self, selector, duplicates_only):
        cube, gt = duplicates_only
        ordering, scores = selector.rank_bands(cube, gt, SelectionConfig())
        assert ordering == list(range(cube.bands))
        assert len(set(scores)) == 1

    def test_homogeneity_prefers_constant_band(self, selector):
        gt = GroundTruthMap(np.zeros((4, 4), dtype=int))
        checker = (np.indices((4, 4)).sum(axis=0) % 2) * 65535
        cube = Cube(np.stack([
            checker,
            np.full((4, 4), 100),
        ]).astype(np.uint16))
        ordering, scores = selector.rank_bands(
            cube, gt, SelectionConfig(criterion=HOMOGENEITY),
        )
        assert ordering == [1, 0]
        assert scores[1] == 1.0

    def test_threaded_matches_serial(
        self, selector, threaded_selector, planted,
    ):
        _, cube, gt = planted
        config = SelectionConfig()
        assert selector.rank_bands(cube, gt, config) == \
            threaded_selector.rank_bands(cube, gt, config)

    def test_shape_mismatch(self, selector):
        cube = Cube(np.zeros((1, 2, 3), dtype=np.uint16))
        gt = GroundTruthMap(np.zeros((3, 2), dtype=int))
        with pytest.raises(ShapeMismatch):
            selector.rank_bands(cube, gt, SelectionConfig())


class TestUpdateEstimate:
    def test_halves_round_up(self, selector):
        est = GtEstimate([[3, 0, 5]], 17)
        band = QuantizedBand([[4, 16, 5]], 17)
        new = selector.update_estimate(est, band)
        np.testing.assert_array_equal(new.values, [[4, 8, 5]])
        assert new.levels == 17

    def test_equal_inputs_unchanged(self, selector):
        est = GtEstimate([[1, 2], [3, 4]], 17)
        assert selector.update_estimate(est, est) == est

    def test_shape_mismatch(self, selector):
        with pytest.raises(ShapeMismatch):
            selector.update_estimate(
                GtEstimate([[0, 1]], 4), QuantizedBand([[0], [1]], 4),
            )

    def test_level_mismatch(self, selector):
        with pytest.raises(LevelMismatch):
            selector.update_estimate(
                GtEstimate([[0, 1]], 4), QuantizedBand([[0, 1]], 5),
            )


class TestGreedySelect:
    def test_complement_and_constant_rejected(self, selector, tiny_pair):
        cube, gt = tiny_pair
        report = selector.greedy_select(
            cube, gt, SelectionConfig(levels=2, threshold=0.0),
        )
        assert report.ordering == [0, 1, 2]
        assert report.selected == [0]
        complement, constant = report.decisions
        assert complement.mi_before == pytest.approx(1.0)
        assert complement.mi_after == 0.0
        assert not complement.accepted
        assert constant.gain == 0.0
        assert not constant.accepted
        assert report.final_mi == pytest.approx(1.0)
        assert_acceptance_rule(report)

    def test_negative_threshold_permits_duplicate(self, selector, tiny_pair):
        cube, gt = tiny_pair
        duplicate = Cube(np.stack([cube.band(0), cube.band(0)]))
        report = selector.greedy_select(
            duplicate, gt, SelectionConfig(levels=2, threshold=-0.02),
        )
        assert report.selected == [0, 1]
        assert report.decisions[0].gain == 0.0
        strict = selector.greedy_select(
            duplicate, gt, SelectionConfig(levels=2, threshold=0.0),
        )
        assert strict.selected == [0]

    def test_max_bands_one(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=-1.0, max_bands=1),
        )
        assert len(report.selected) == 1
        assert len(report.trace) == 1

    def test_max_bands_caps_selection(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=-10.0, max_bands=4),
        )
        assert len(report.selected) == 4
        assert report.selected == report.ordering[:4]

    def test_infinite_threshold_keeps_seed_only(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=math.inf),
        )
        assert report.selected == [report.ordering[0]]
        assert len(report.trace) == cube.bands
        assert_acceptance_rule(report)

    def test_no_noise_band_at_zero_threshold(self, selector, planted):
        spec, cube, gt = planted
        report = selector.greedy_select(cube, gt, SelectionConfig())
        assert not set(report.selected) & set(spec.noise_bands())
        assert_acceptance_rule(report)

    @pytest.mark.parametrize('criterion', [MI, HOMOGENEITY])
    @pytest.mark.parametrize('threshold', [0.0, -0.005, -0.02])
    def test_trace_replays(self, selector, planted, criterion, threshold):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(criterion=criterion,
                                      threshold=threshold),
        )
        assert_acceptance_rule(report)
        replayed, _ = selector.replay_trace(cube, gt, report)
        for recorded, fresh in zip(report.trace, replayed):
            assert recorded.band == fresh.band
            assert abs(recorded.mi_before - fresh.mi_before) <= 1e-12
            assert abs(recorded.mi_after - fresh.mi_after) <= 1e-12
            assert recorded.accepted == fresh.accepted
        assert selector.verify_report(cube, gt, report) == []

    def test_committed_estimate_is_fold(self, selector, planted):
        _, cube, gt = planted
        config = SelectionConfig(threshold=-0.01)
        report = selector.greedy_select(cube, gt, config)
        _, committed = selector.replay_trace(cube, gt, report)
        folded = GtEstimate.from_band(
            quantize_band(cube.band(report.selected[0]), config.levels),
        )
        for band in report.selected[1:]:
            folded = selector.update_estimate(
                folded, quantize_band(cube.band(band), config.levels),
            )
        assert committed == folded

    def test_tampered_report_is_flagged(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=-0.02),
        )
        entry = report.trace[1]
        report.trace[1] = entry._replace(mi_after=entry.mi_after + 0.5)
        assert selector.verify_report(cube, gt, report)

    def test_empty_trace(self, selector, tiny_pair):
        cube, gt = tiny_pair
        report = selector.greedy_select(cube, gt, SelectionConfig(levels=2))
        report.trace = []
        with pytest.raises(EmptyTrace):
            selector.replay_trace(cube, gt, report)
        assert selector.verify_report(cube, gt, report) == [
            'Selection report has no trace entries',
        ]

    def test_no_accepted_entries(self, selector, tiny_pair):
        cube, gt = tiny_pair
        report = selector.greedy_select(cube, gt, SelectionConfig(levels=2))
        assert report.selected == [0]
        report.trace[0] = report.trace[0]._replace(accepted=False)
        report.selected = []
        problems = selector.verify_report(cube, gt, report)
        assert 'Seed entry is not marked accepted' in problems
        assert 'No accepted trace entries' in problems

    def test_labeled_only_ignores_unidentified(self, selector):
        labels = np.array([[1, 1, 2, 2], [0, 0, 0, 0]])
        gt = GroundTruthMap(labels)
        # band 1 only varies where the GT is unidentified
        cube = Cube(np.array([
            [[0, 0, 9, 9], [5, 5, 5, 5]],
            [[3, 3, 3, 3], [0, 9, 0, 9]],
        ], dtype=np.uint16))
        everywhere = selector.greedy_select(cube, gt, SelectionConfig())
        labeled = selector.greedy_select(
            cube, gt, SelectionConfig(labeled_only=True),
        )
        assert labeled.ordering[0] == 0
        assert labeled.final_mi == pytest.approx(1.0)
        assert everywhere.final_mi != labeled.final_mi


class TestSelectionReport:
    def test_identical_runs_serialize_identically(self, planted):
        _, cube, gt = planted
        config = SelectionConfig(threshold=-0.005)
        with BandSelector(workers=1) as first, \
                BandSelector(workers=3) as second:
            a = first.greedy_select(cube, gt, config).to_json()
            b = second.greedy_select(cube, gt, config).to_json()
        assert a == b

    def test_json_fields(self, selector, tiny_pair):
        cube, gt = tiny_pair
        report = selector.greedy_select(cube, gt, SelectionConfig(levels=2))
        data = report.to_dict()
        assert list(data) == [
            'criterion', 'threshold', 'levels', 'glcm', 'labeled_only',
            'ordering', 'scores', 'trace', 'selected', 'final_mi',
        ]
        assert data['glcm'] == {
            'levels': 8, 'offset': [0, 1], 'symmetric': True,
        }
        assert list(data['trace'][0]) == [
            'band', 'mi_before', 'mi_after', 'accepted',
        ]
        assert report.to_json().endswith('}\n')

    def test_json_reload(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=-0.01),
        )
        again = SelectionReport.from_json(report.to_json())
        assert again.to_json() == report.to_json()
        assert selector.verify_report(cube, gt, again) == []

    def test_infinite_threshold_is_strict_json(self, selector, tiny_pair):
        cube, gt = tiny_pair
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=math.inf, levels=2),
        )
        assert report.selected == [report.ordering[0]]

        def reject(token):
            raise ValueError(token)

        data = json.loads(report.to_json(), parse_constant=reject)
        assert data['threshold'] == 'inf'
        again = SelectionReport.from_json(report.to_json())
        assert again.config.threshold == math.inf
        assert selector.verify_report(cube, gt, again) == []

    def test_snapshot_prefix(self, selector, planted):
        _, cube, gt = planted
        report = selector.greedy_select(
            cube, gt, SelectionConfig(threshold=-0.02),
        )
        assert report.snapshot(2) == report.selected[:2]


class TestSelectionConfig:
    def test_defaults(self):
        config = SelectionConfig()
        assert config.criterion is MI
        assert config.threshold == 0.0
        assert config.levels == 17
        assert config.max_bands is None
        assert not config.labeled_only

    @pytest.mark.parametrize('kwargs', [
        dict(levels=1),
        dict(max_bands=0),
        dict(threshold=float('nan')),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidSelectionConfig):
            SelectionConfig(**kwargs)

    def test_with_threshold_keeps_rest(self):
        config = SelectionConfig(levels=9, max_bands=3, labeled_only=True)
        other = config.with_threshold(-0.5)
        assert other.threshold == -0.5
        assert (other.levels, other.max_bands, other.labeled_only) == \
            (9, 3, True)

    def test_criterion_from_name(self):
        assert RankingCriterion.from_name('Homogeneity') is HOMOGENEITY
        with pytest.raises(ValueError):
            RankingCriterion.from_name('contrast')
