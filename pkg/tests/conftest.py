import numpy as np
import pytest

from pybandsel import BandSelector
from pybandsel import generate_synthetic
from pybandsel.types import Cube
from pybandsel.types import GroundTruthMap
from pybandsel.types import SyntheticSpec


@pytest.fixture
def selector():
    with BandSelector(workers=1) as client:
        yield client


@pytest.fixture
def threaded_selector():
    with BandSelector(workers=4) as client:
        yield client


@pytest.fixture
def tiny_pair():
    """2x2 grid: band 0 is the GT, band 1 its complement, band 2 zeros."""
    gt = GroundTruthMap([[0, 0], [1, 1]])
    cube = Cube(np.array([
        [[0, 0], [1, 1]],
        [[1, 1], [0, 0]],
        [[0, 0], [0, 0]],
    ], dtype=np.uint16))
    return cube, gt


@pytest.fixture
def planted():
    spec = SyntheticSpec(
        rows=32,
        cols=32,
        n_classes=4,
        n_signal=3,
        n_noise=5,
        n_redundant=2,
        noise_sigma=100.0,
        seed=7,
    )
    cube, gt = generate_synthetic(spec)
    return spec, cube, gt


@pytest.fixture
def duplicates_only():
    """Every band is a byte-identical copy of band 0."""
    spec = SyntheticSpec(
        rows=16,
        cols=16,
        n_classes=4,
        n_signal=1,
        n_redundant=7,
        noise_sigma=2000.0,
        seed=3,
    )
    return generate_synthetic(spec)
