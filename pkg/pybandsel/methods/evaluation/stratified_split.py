import math

import numpy as np

from ...exceptions import InvalidFraction
from ...exceptions import NoLabeledPixels
from ...scaffold import Scaffold
from ...types import GroundTruthMap
from ...types import SplitAssignment


class StratifiedSplit(Scaffold):
    @staticmethod
    def stratified_split(
        gt: GroundTruthMap,
        fraction: float = 0.5,
        seed: int = 0,
    ) -> SplitAssignment:
        if not 0.0 < fraction < 1.0:
            raise InvalidFraction(fraction)
        labels = gt.flat
        if not np.any(labels != GroundTruthMap.UNIDENTIFIED):
            raise NoLabeledPixels()
        rng = np.random.default_rng(seed)
        train, test = [], []
        # classes are visited in ascending label order so one generator
        # stream gives the same split for the same seed
        for label in range(1, GroundTruthMap.MAX_LABEL + 1):
            pixels = np.flatnonzero(labels == label)
            if not pixels.size:
                continue
            shuffled = rng.permutation(pixels)
            n_train = math.ceil(round(fraction * pixels.size, 9))
            train.append(shuffled[:n_train])
            test.append(shuffled[n_train:])
        return SplitAssignment(
            np.concatenate(train),
            np.concatenate(test),
            seed,
            fraction,
        )
