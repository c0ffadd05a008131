from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist

from ...exceptions import EmptySubset
from ...exceptions import EmptyTrainSet
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import SplitAssignment


class Classify1NN(Scaffold):
    CLASSIFIER_NAME = '1nn-euclidean'
    CHUNK_PIXELS = 512

    def classify_1nn(
        self,
        cube: Cube,
        subset: Sequence[int],
        split: SplitAssignment,
        gt: GroundTruthMap,
    ) -> np.ndarray:
        """Label of the nearest training pixel for every test pixel.

        Squared distances between u16 spectra are exact in float64, and
        ``argmin`` keeps the first minimum, so ties go to the lowest
        training pixel index.
        """
        if len(subset) == 0:
            raise EmptySubset()
        if split.train.size == 0:
            raise EmptyTrainSet()
        gt.check_pairing(cube)
        features = cube.pixels(sorted(subset)).astype(np.float64)
        train_x = features[split.train]
        train_y = gt.flat[split.train]
        test_x = features[split.test]

        def nearest(start: int) -> np.ndarray:
            distances = cdist(
                test_x[start:start + self.CHUNK_PIXELS],
                train_x,
                'sqeuclidean',
            )
            return train_y[np.argmin(distances, axis=1)]

        chunks = self._map(
            nearest,
            range(0, test_x.shape[0], self.CHUNK_PIXELS),
        )
        if not chunks:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(chunks)
