import logging
from pathlib import Path
from typing import Sequence
from typing import Tuple

import numpy as np
from sklearn.datasets import dump_svmlight_file

from ...exceptions import EmptySubset
from ...scaffold import Scaffold
from ...types import Cube
from ...types import GroundTruthMap
from ...types import SplitAssignment

py_logger = logging.getLogger('pybandsel')


class ExportSplit(Scaffold):
    @staticmethod
    def export_split(
        cube: Cube,
        gt: GroundTruthMap,
        subset: Sequence[int],
        split: SplitAssignment,
        prefix,
    ) -> Tuple[Path, Path]:
        """Write ``<prefix>.train.svm`` and ``<prefix>.test.svm``.

        One line per pixel, ``label idx:value`` with 1-based feature
        indices in ``subset`` order; zero-valued features are omitted.
        """
        if len(subset) == 0:
            raise EmptySubset()
        gt.check_pairing(cube)
        features = cube.pixels(list(subset)).astype(np.int64)
        labels = gt.flat
        paths = []
        for name, pixels in (('train', split.train), ('test', split.test)):
            path = Path(f'{prefix}.{name}.svm')
            dump_svmlight_file(
                features[pixels],
                labels[pixels],
                str(path),
                zero_based=False,
            )
            py_logger.info(f'Exported {pixels.size} {name} pixels to {path}')
            paths.append(path)
        return paths[0], paths[1]
