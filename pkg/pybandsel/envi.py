import logging
import os
from pathlib import Path
from typing import Dict
from typing import Union

import numpy as np

from .exceptions import MalformedHeader
from .exceptions import MissingFile
from .exceptions import ParseError
from .exceptions import ShapeMismatch
from .exceptions import TruncatedData
from .exceptions import UnsupportedFormat
from .types import Cube
from .types import GroundTruthMap

py_logger = logging.getLogger('pybandsel')

PathLike = Union[str, os.PathLike]

HEADER_KEYS = (
    'samples',
    'lines',
    'bands',
    'data type',
    'interleave',
    'byte order',
)
_INTEGER_KEYS = ('samples', 'lines', 'bands', 'data type', 'byte order')
# unsigned 16-bit in the ENVI data type table
DATA_TYPE_U16 = 12
BYTE_ORDER_LITTLE = 0
INTERLEAVE_BSQ = 'bsq'


def raw_path_for(header_path: PathLike) -> Path:
    return Path(header_path).with_suffix('.raw')


def read_header(header_path: PathLike) -> Dict[str, Union[int, str]]:
    header_path = Path(header_path)
    if not header_path.is_file():
        raise MissingFile(str(header_path))
    header: Dict[str, Union[int, str]] = {}
    text = header_path.read_text(encoding='utf-8')
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or (number == 1 and line.upper() == 'ENVI'):
            continue
        if '=' not in line:
            raise MalformedHeader(
                str(header_path),
                f'line {number} is not "key = value"',
            )
        key, value = (part.strip() for part in line.split('=', 1))
        key = ' '.join(key.lower().split())
        if key not in HEADER_KEYS:
            raise MalformedHeader(str(header_path), f'unknown key "{key}"')
        if key in _INTEGER_KEYS:
            try:
                header[key] = int(value)
            except ValueError:
                raise MalformedHeader(
                    str(header_path),
                    f'"{key}" is not an integer: "{value}"',
                )
        else:
            header[key] = value.lower()
    missing = [k for k in HEADER_KEYS if k not in header]
    if missing:
        raise MalformedHeader(
            str(header_path),
            'missing ' + ', '.join(f'"{k}"' for k in missing),
        )
    for key in ('samples', 'lines', 'bands'):
        if header[key] < 1:
            raise MalformedHeader(
                str(header_path),
                f'"{key}" must be positive, got {header[key]}',
            )
    return header


def load_cube(header_path: PathLike) -> Cube:
    header = read_header(header_path)
    if header['data type'] != DATA_TYPE_U16:
        raise UnsupportedFormat(
            'data type', str(header['data type']), str(DATA_TYPE_U16),
        )
    if header['interleave'] != INTERLEAVE_BSQ:
        raise UnsupportedFormat(
            'interleave', str(header['interleave']), INTERLEAVE_BSQ,
        )
    if header['byte order'] != BYTE_ORDER_LITTLE:
        raise UnsupportedFormat(
            'byte order', str(header['byte order']), str(BYTE_ORDER_LITTLE),
        )
    bands = int(header['bands'])
    rows = int(header['lines'])
    cols = int(header['samples'])
    raw_path = raw_path_for(header_path)
    if not raw_path.is_file():
        raise MissingFile(str(raw_path))
    expected = 2 * bands * rows * cols
    actual = raw_path.stat().st_size
    if actual != expected:
        raise TruncatedData(str(raw_path), expected, actual)
    samples = np.fromfile(raw_path, dtype='<u2')
    py_logger.info(
        f'Loaded cube {raw_path.name}: {bands} bands of {rows}x{cols}',
    )
    return Cube.from_samples(bands, rows, cols, samples)


def save_cube(cube: Cube, header_path: PathLike) -> Path:
    header_path = Path(header_path)
    raw_path = raw_path_for(header_path)
    values = {
        'samples': cube.cols,
        'lines': cube.rows,
        'bands': cube.bands,
        'data type': DATA_TYPE_U16,
        'interleave': INTERLEAVE_BSQ,
        'byte order': BYTE_ORDER_LITTLE,
    }
    header_path.write_text(
        ''.join(f'{key} = {values[key]}\n' for key in HEADER_KEYS),
        encoding='utf-8',
    )
    cube.data.astype('<u2').tofile(raw_path)
    py_logger.debug('Wrote cube %s (%d bytes)', raw_path, cube.data.nbytes)
    return raw_path


def load_ground_truth(path: PathLike) -> GroundTruthMap:
    path = Path(path)
    if not path.is_file():
        raise MissingFile(str(path))
    lines = path.read_text(encoding='utf-8').splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(str(path), 0, '')
    rows = []
    for number, line in enumerate(lines):
        row = []
        for token in line.split(','):
            try:
                row.append(int(token.strip()))
            except ValueError:
                raise ParseError(str(path), number, token)
        if rows and len(row) != len(rows[0]):
            raise ShapeMismatch(
                f'Row {number} of "{path}" has {len(row)} values, '
                f'expected {len(rows[0])}',
            )
        rows.append(row)
    gt = GroundTruthMap(np.array(rows, dtype=np.int64))
    py_logger.info(f'Loaded ground truth {path.name}: {gt.rows}x{gt.cols}')
    return gt


def save_ground_truth(gt: GroundTruthMap, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(
        ''.join(
            ','.join(str(int(v)) for v in row) + '\n'
            for row in gt.labels
        ),
        encoding='utf-8',
    )
    return path
