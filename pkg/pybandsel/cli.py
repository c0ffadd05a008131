"""Command line front end: ``inspect``, ``select``, ``sweep``, ``synth``
and ``export``.

Data goes to the files named on the command line, diagnostics to stderr.
Every successful run writes a ``<output>.manifest.json`` next to its
outputs.
"""
import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import List
from typing import Optional
from typing import Sequence

from .band_selector import BandSelector
from .envi import load_cube
from .envi import load_ground_truth
from .envi import raw_path_for
from .envi import save_cube
from .envi import save_ground_truth
from .exceptions import BandSelectionError
from .synthetic import generate_synthetic
from .types import GlcmParams
from .types import RankingCriterion
from .types import RunManifest
from .types import SelectionConfig
from .types import SnapshotPreset
from .types import SweepRow
from .types import SyntheticSpec
from .types import ThresholdPreset

py_logger = logging.getLogger('pybandsel')

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2


def _float_list(raw: str) -> List[float]:
    try:
        values = [float(x) for x in raw.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'not a list of numbers: "{raw}"')
    if not values:
        raise argparse.ArgumentTypeError('empty list')
    return values


def _int_list(raw: str) -> List[int]:
    try:
        values = [int(x) for x in raw.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'not a list of integers: "{raw}"')
    if not values:
        raise argparse.ArgumentTypeError('empty list')
    return values


def _offset(raw: str) -> tuple:
    values = _int_list(raw)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f'offset needs "drow,dcol": "{raw}"')
    return values[0], values[1]


def _snapshots(raw: str) -> List[int]:
    if raw == 'every':
        return list(SnapshotPreset.EVERY_ACCEPTANCE.value)
    if raw == 'table':
        return list(SnapshotPreset.TABLE.value)
    return _int_list(raw)


# argparse only takes a lone negative number as a value; "-0.01,-0.02",
# "-1,0" and "-inf" would be read as unknown options
_SIGNED_VALUE_FLAGS = frozenset({
    '--threshold', '--thresholds', '--offset', '--bands', '--snapshots',
})


def _attach_signed_values(argv: Sequence[str]) -> List[str]:
    joined = []
    pending = None
    for arg in argv:
        if pending is not None and arg.startswith('-'):
            joined[-1] = f'{pending}={arg}'
            pending = None
            continue
        pending = arg if arg in _SIGNED_VALUE_FLAGS else None
        joined.append(arg)
    return joined


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='more diagnostics on stderr (repeatable)')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='only errors on stderr')


def _add_selection_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--cube', required=True, metavar='HEADER',
                        help='cube header file (raw data next to it)')
    parser.add_argument('--gt', required=True, metavar='FILE',
                        help='ground truth text file')
    parser.add_argument('--levels', type=int,
                        default=SelectionConfig.DEFAULT_LEVELS,
                        help='quantization levels for MI (default 17)')
    parser.add_argument('--glcm-levels', type=int, default=8,
                        help='gray levels for the GLCM (default 8)')
    parser.add_argument('--offset', type=_offset, default=(0, 1),
                        metavar='DROW,DCOL', help='GLCM pixel offset')
    parser.add_argument('--asymmetric', action='store_true',
                        help='do not symmetrize the GLCM')
    parser.add_argument('--labeled-only', action='store_true',
                        help='compute MI over labeled pixels only')
    parser.add_argument('--workers', type=int, default=BandSelector.WORKERS,
                        help='worker threads for per-band scoring')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pybandsel',
        description='Greedy band selection for hyperspectral cubes.',
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    inspect = commands.add_parser(
        'inspect', help='per-band MI and homogeneity curves as CSV',
    )
    _add_selection_flags(inspect)
    inspect.add_argument('--out', required=True, metavar='CSV')
    _add_common(inspect)

    select = commands.add_parser(
        'select', help='run one greedy selection, write the JSON report',
    )
    _add_selection_flags(select)
    select.add_argument('--criterion', default='mi',
                        choices=[c.value for c in RankingCriterion])
    select.add_argument('--threshold', type=float, default=0.0)
    select.add_argument('--max-bands', type=int, default=None)
    select.add_argument('--verify', action='store_true',
                        help='replay the trace and fail if it is unsound')
    select.add_argument('--out', required=True, metavar='JSON')
    _add_common(select)

    sweep = commands.add_parser(
        'sweep', help='selection and accuracy for several thresholds',
    )
    _add_selection_flags(sweep)
    sweep.add_argument('--criterion', default='mi',
                       choices=[c.value for c in RankingCriterion])
    sweep.add_argument('--thresholds', type=_float_list,
                       default=list(ThresholdPreset.TABLE.value),
                       metavar='T1,T2,...')
    sweep.add_argument('--seed', type=int, default=0)
    sweep.add_argument('--fraction', type=float, default=0.5,
                       help='labeled pixels used for training per class')
    sweep.add_argument('--snapshots', type=_snapshots, default=[],
                       metavar='every|table|N1,N2,...')
    sweep.add_argument('--no-eval', action='store_true',
                       help='selection only, empty accuracy column')
    sweep.add_argument('--baseline', action='store_true',
                       help='also evaluate all bands (stored in manifest)')
    sweep.add_argument('--out', required=True, metavar='CSV')
    _add_common(sweep)

    synth = commands.add_parser(
        'synth', help='write a planted synthetic cube and ground truth',
    )
    synth.add_argument('--rows', type=int, required=True)
    synth.add_argument('--cols', type=int, required=True)
    synth.add_argument('--classes', type=int, required=True)
    synth.add_argument('--signal', type=int, default=1)
    synth.add_argument('--noise', type=int, default=0)
    synth.add_argument('--redundant', type=int, default=0)
    synth.add_argument('--sigma', type=float, default=0.0)
    synth.add_argument('--seed', type=int, default=0)
    synth.add_argument('--out-prefix', required=True, metavar='PREFIX')
    _add_common(synth)

    export = commands.add_parser(
        'export', help='write train/test files for external classifiers',
    )
    export.add_argument('--cube', required=True, metavar='HEADER')
    export.add_argument('--gt', required=True, metavar='FILE')
    export.add_argument('--bands', type=_int_list, required=True,
                        metavar='I,J,...')
    export.add_argument('--seed', type=int, default=0)
    export.add_argument('--fraction', type=float, default=0.5)
    export.add_argument('--out-prefix', required=True, metavar='PREFIX')
    _add_common(export)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logger = logging.getLogger('pybandsel')
    logger.setLevel(level)
    # the CLI handler is rebound on every run so it follows sys.stderr
    for old in list(logger.handlers):
        if getattr(old, '_pybandsel_cli', False):
            logger.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    handler._pybandsel_cli = True
    logger.addHandler(handler)


def _config(args: argparse.Namespace, threshold: float = 0.0):
    return SelectionConfig(
        criterion=RankingCriterion.from_name(
            getattr(args, 'criterion', 'mi'),
        ),
        threshold=threshold,
        levels=args.levels,
        glcm=GlcmParams(
            levels=args.glcm_levels,
            offset=tuple(args.offset),
            symmetric=not args.asymmetric,
        ),
        max_bands=getattr(args, 'max_bands', None),
        labeled_only=args.labeled_only,
    )


def _parameters(args: argparse.Namespace) -> dict:
    skip = {'verbose', 'quiet', 'workers'}

    def plain(value):
        if isinstance(value, (tuple, list)):
            return [plain(v) for v in value]
        if isinstance(value, float):
            return RunManifest.json_float(value)
        return value

    return {
        k: plain(v)
        for k, v in sorted(vars(args).items()) if k not in skip
    }


def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)


def _load_pair(args: argparse.Namespace, manifest: RunManifest):
    cube = load_cube(args.cube)
    gt = load_ground_truth(args.gt)
    gt.check_pairing(cube)
    manifest.add_input(args.cube)
    manifest.add_input(raw_path_for(args.cube))
    manifest.add_input(args.gt)
    return cube, gt


def _run_inspect(args, manifest: RunManifest) -> List[Path]:
    cube, gt = _load_pair(args, manifest)
    config = _config(args)
    with BandSelector(workers=args.workers) as selector:
        profiles = selector.inspect_bands(cube, gt, config)
        noisy = selector.low_information_bands([p.mi_bits for p in profiles])
        gt_texture = selector.gt_homogeneity(gt, config.glcm)
    py_logger.info(f'Lowest-MI bands: {noisy}')
    py_logger.info(f'Ground truth homogeneity: {gt_texture:.6f}')
    manifest.extra['low_information_bands'] = noisy
    manifest.extra['gt_homogeneity'] = gt_texture
    out = Path(args.out)
    _write_csv(
        out,
        ('band', 'mi_bits', 'homogeneity'),
        ([p.band, repr(p.mi_bits), repr(p.homogeneity)] for p in profiles),
    )
    return [out]


def _run_select(args, manifest: RunManifest) -> List[Path]:
    cube, gt = _load_pair(args, manifest)
    config = _config(args, args.threshold)
    with BandSelector(workers=args.workers) as selector:
        report = selector.greedy_select(cube, gt, config)
        if args.verify:
            problems = selector.verify_report(cube, gt, report)
            for problem in problems:
                py_logger.error(problem)
            if problems:
                raise BandSelectionError('Selection trace is unsound')
    out = Path(args.out)
    out.write_text(report.to_json(), encoding='utf-8')
    manifest.extra['selected'] = report.selected
    return [out]


def _run_sweep(args, manifest: RunManifest) -> List[Path]:
    cube, gt = _load_pair(args, manifest)
    config = _config(args)
    with BandSelector(workers=args.workers) as selector:
        split = None
        if not args.no_eval or args.baseline:
            split = selector.stratified_split(gt, args.fraction, args.seed)
        rows, reports = selector.sweep(
            cube,
            gt,
            args.thresholds,
            config,
            split,
            snapshots=args.snapshots,
            evaluate=not args.no_eval,
        )
        if args.baseline:
            manifest.extra['baseline_accuracy_percent'] = \
                selector.evaluate_subset(
                    cube, gt, list(range(cube.bands)), split,
                ).accuracy_percent
    manifest.extra['retained'] = {
        repr(r.config.threshold): len(r.selected) for r in reports
    }
    out = Path(args.out)
    _write_csv(out, SweepRow.HEADER, (row.to_csv_row() for row in rows))
    return [out]


def _run_synth(args, manifest: RunManifest) -> List[Path]:
    spec = SyntheticSpec(
        rows=args.rows,
        cols=args.cols,
        n_classes=args.classes,
        n_signal=args.signal,
        n_noise=args.noise,
        n_redundant=args.redundant,
        noise_sigma=args.sigma,
        seed=args.seed,
    )
    cube, gt = generate_synthetic(spec)
    header = Path(f'{args.out_prefix}.hdr')
    raw = save_cube(cube, header)
    gt_path = save_ground_truth(gt, f'{args.out_prefix}.gt.txt')
    return [header, raw, gt_path]


def _run_export(args, manifest: RunManifest) -> List[Path]:
    cube, gt = _load_pair(args, manifest)
    with BandSelector(workers=1) as selector:
        split = selector.stratified_split(gt, args.fraction, args.seed)
        train, test = selector.export_split(
            cube, gt, args.bands, split, args.out_prefix,
        )
    return [train, test]


_COMMANDS = {
    'inspect': _run_inspect,
    'select': _run_select,
    'sweep': _run_sweep,
    'synth': _run_synth,
    'export': _run_export,
}


def _manifest_path(args: argparse.Namespace) -> Path:
    if getattr(args, 'out_prefix', None):
        return Path(f'{args.out_prefix}.manifest.json')
    return Path(f'{args.out}.manifest.json')


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(
            _attach_signed_values(sys.argv[1:] if argv is None else argv),
        )
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    _configure_logging(args)
    manifest = RunManifest(
        args.command,
        _parameters(args),
        getattr(args, 'seed', None),
    )
    try:
        outputs = _COMMANDS[args.command](args, manifest)
    except (BandSelectionError, OSError, ValueError) as e:
        py_logger.error(f'{args.command}: {e}')
        return EXIT_DATA_ERROR
    for path in outputs:
        manifest.add_output(path)
    manifest_path = manifest.write(_manifest_path(args))
    py_logger.info(f'Wrote {", ".join(manifest.outputs)} and {manifest_path}')
    return EXIT_OK


def main():
    sys.exit(run_cli())
