import numpy as np
import pytest

from pybandsel import load_cube
from pybandsel import load_ground_truth
from pybandsel import save_cube
from pybandsel import save_ground_truth
from pybandsel.envi import read_header
from pybandsel.exceptions import LabelOutOfRange
from pybandsel.exceptions import MalformedHeader
from pybandsel.exceptions import MissingFile
from pybandsel.exceptions import ParseError
from pybandsel.exceptions import ShapeMismatch
from pybandsel.exceptions import TruncatedData
from pybandsel.exceptions import UnsupportedFormat
from pybandsel.types import Cube
from pybandsel.types import GroundTruthMap

HEADER = (
    'samples = 2\n'
    'lines = 2\n'
    'bands = 3\n'
    'data type = 12\n'
    'interleave = bsq\n'
    'byte order = 0\n'
)


def write_pair(tmp_path, header=HEADER, n_bytes=24):
    hdr = tmp_path / 'cube.hdr'
    hdr.write_text(header, encoding='utf-8')
    (tmp_path / 'cube.raw').write_bytes(
        np.arange(n_bytes, dtype=np.uint8).tobytes(),
    )
    return hdr


class TestLoadCube:
    def test_dimensions_from_header(self, tmp_path):
        cube = load_cube(write_pair(tmp_path))
        assert (cube.bands, cube.rows, cube.cols) == (3, 2, 2)
        assert cube.band(0).shape == (2, 2)

    def test_little_endian_band_sequential(self, tmp_path):
        hdr = tmp_path / 'cube.hdr'
        hdr.write_text(HEADER, encoding='utf-8')
        samples = np.arange(12, dtype='<u2') * 1000 + 1
        samples.tofile(tmp_path / 'cube.raw')
        cube = load_cube(hdr)
        np.testing.assert_array_equal(cube.samples, samples)
        np.testing.assert_array_equal(cube.band(1), [[4001, 5001],
                                                     [6001, 7001]])

    def test_truncated_raw(self, tmp_path):
        with pytest.raises(TruncatedData):
            load_cube(write_pair(tmp_path, n_bytes=23))

    def test_oversized_raw(self, tmp_path):
        with pytest.raises(TruncatedData):
            load_cube(write_pair(tmp_path, n_bytes=26))

    @pytest.mark.parametrize('line, replacement', [
        ('byte order = 0', 'byte order = 1'),
        ('data type = 12', 'data type = 4'),
        ('interleave = bsq', 'interleave = bil'),
    ])
    def test_unsupported_format(self, tmp_path, line, replacement):
        header = HEADER.replace(line, replacement)
        with pytest.raises(UnsupportedFormat):
            load_cube(write_pair(tmp_path, header=header))

    def test_unknown_key(self, tmp_path):
        with pytest.raises(MalformedHeader):
            load_cube(write_pair(tmp_path, header=HEADER + 'wavelength = 1\n'))

    def test_non_integer_value(self, tmp_path):
        header = HEADER.replace('bands = 3', 'bands = three')
        with pytest.raises(MalformedHeader):
            load_cube(write_pair(tmp_path, header=header))

    def test_missing_key(self, tmp_path):
        header = HEADER.replace('lines = 2\n', '')
        with pytest.raises(MalformedHeader):
            load_cube(write_pair(tmp_path, header=header))

    def test_envi_magic_line_is_accepted(self, tmp_path):
        cube = load_cube(write_pair(tmp_path, header='ENVI\n' + HEADER))
        assert cube.bands == 3

    def test_missing_header(self, tmp_path):
        with pytest.raises(MissingFile):
            load_cube(tmp_path / 'absent.hdr')

    def test_missing_raw(self, tmp_path):
        hdr = tmp_path / 'cube.hdr'
        hdr.write_text(HEADER, encoding='utf-8')
        with pytest.raises(FileNotFoundError):
            load_cube(hdr)


class TestRoundTrip:
    def test_cube_is_bit_exact(self, tmp_path):
        rng = np.random.default_rng(42)
        cube = Cube(rng.integers(0, 65536, size=(5, 7, 3), dtype=np.uint16))
        raw = save_cube(cube, tmp_path / 'out.hdr')
        assert raw == tmp_path / 'out.raw'
        assert raw.stat().st_size == 2 * 5 * 7 * 3
        assert load_cube(tmp_path / 'out.hdr') == cube

    def test_written_header_parses(self, tmp_path):
        cube = Cube(np.zeros((2, 4, 6), dtype=np.uint16))
        save_cube(cube, tmp_path / 'out.hdr')
        header = read_header(tmp_path / 'out.hdr')
        assert header['samples'] == 6
        assert header['lines'] == 4
        assert header['bands'] == 2

    def test_ground_truth(self, tmp_path):
        gt = GroundTruthMap([[0, 1, 2], [16, 5, 0]])
        path = save_ground_truth(gt, tmp_path / 'gt.txt')
        assert path.read_text() == '0,1,2\n16,5,0\n'
        assert load_ground_truth(path) == gt


class TestLoadGroundTruth:
    def test_parses_grid(self, tmp_path):
        path = tmp_path / 'gt.txt'
        path.write_text('0,1\n16,5')
        gt = load_ground_truth(path)
        np.testing.assert_array_equal(gt.labels, [[0, 1], [16, 5]])
        assert (gt.rows, gt.cols) == (2, 2)

    def test_label_out_of_range(self, tmp_path):
        path = tmp_path / 'gt.txt'
        path.write_text('0,17')
        with pytest.raises(LabelOutOfRange):
            load_ground_truth(path)

    def test_ragged_rows(self, tmp_path):
        path = tmp_path / 'gt.txt'
        path.write_text('0,1\n2')
        with pytest.raises(ShapeMismatch):
            load_ground_truth(path)

    def test_bad_token(self, tmp_path):
        path = tmp_path / 'gt.txt'
        path.write_text('0,x\n1,2')
        with pytest.raises(ParseError):
            load_ground_truth(path)

    def test_trailing_newline_ignored(self, tmp_path):
        path = tmp_path / 'gt.txt'
        path.write_text('3,4\n5,6\n\n')
        assert load_ground_truth(path).rows == 2

    def test_missing(self, tmp_path):
        with pytest.raises(MissingFile):
            load_ground_truth(tmp_path / 'nope.txt')

    def test_pairing_checks_shape(self, tmp_path):
        gt = GroundTruthMap([[0, 1, 2]])
        cube = Cube(np.zeros((1, 2, 2), dtype=np.uint16))
        with pytest.raises(ShapeMismatch):
            gt.check_pairing(cube)
