class BandSelectionError(Exception):
    pass


class MissingFile(BandSelectionError, FileNotFoundError):
    def __init__(self, path: str):
        super().__init__(
            f'No such file "{path}"',
        )


class MalformedHeader(BandSelectionError):
    def __init__(self, path: str, reason: str):
        super().__init__(
            f'Malformed header "{path}": {reason}',
        )


class UnsupportedFormat(BandSelectionError):
    def __init__(self, key: str, value: str, expected: str):
        super().__init__(
            f'Unsupported {key} "{value}", only {expected} is accepted',
        )


class TruncatedData(BandSelectionError):
    def __init__(self, path: str, expected: int, actual: int):
        super().__init__(
            f'Raw file "{path}" holds {actual} bytes, '
            f'expected {expected}',
        )


class ShapeMismatch(BandSelectionError):
    def __init__(self, message: str):
        super().__init__(
            message,
        )


class LabelOutOfRange(BandSelectionError):
    def __init__(self, label: int, row: int):
        super().__init__(
            f'Label {label} on row {row} is outside 0..16',
        )


class ParseError(BandSelectionError):
    def __init__(self, path: str, row: int, token: str):
        super().__init__(
            f'Cannot parse "{token}" on row {row} of "{path}"',
        )


class InvalidLevels(BandSelectionError):
    def __init__(self, levels: int):
        super().__init__(
            f'At least 2 quantization levels are needed, got {levels}',
        )


class EmptyBand(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Cannot quantize an empty band',
        )


class InvalidSpec(BandSelectionError):
    def __init__(self, message: str):
        super().__init__(
            message,
        )


class SymbolOutOfRange(BandSelectionError):
    def __init__(self, symbol: int, levels: int):
        super().__init__(
            f'Symbol {symbol} is outside 0..{levels - 1}',
        )


class EmptyInput(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Input sequence is empty',
        )


class LengthMismatch(BandSelectionError):
    def __init__(self, len_a: int, len_b: int):
        super().__init__(
            f'Sequences differ in length ({len_a} != {len_b})',
        )


class EmptyHistogram(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Histogram has no observations',
        )


class NoPairs(BandSelectionError):
    def __init__(self, shape: tuple, offset: tuple):
        super().__init__(
            f'No pixel pair exists in a {shape[0]}x{shape[1]} image '
            f'for offset {offset}',
        )


class LevelOverflow(BandSelectionError):
    def __init__(self, value: int, levels: int):
        super().__init__(
            f'Gray level {value} does not fit in {levels} levels',
        )


class InvalidGlcmParams(BandSelectionError):
    def __init__(self, message: str):
        super().__init__(
            message,
        )


class LevelMismatch(BandSelectionError):
    def __init__(self, levels_a: int, levels_b: int):
        super().__init__(
            f'Level counts differ ({levels_a} != {levels_b})',
        )


class EmptyCube(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Cube has no bands',
        )


class InvalidSelectionConfig(BandSelectionError):
    def __init__(self, message: str):
        super().__init__(
            message,
        )


class NoLabeledPixels(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Ground truth has no labeled pixel',
        )


class InvalidFraction(BandSelectionError):
    def __init__(self, fraction: float):
        super().__init__(
            f'Training fraction must be in (0, 1), got {fraction}',
        )


class EmptySubset(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Band subset is empty',
        )


class EmptyTrainSet(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Training set is empty',
        )


class BandIndexOutOfRange(BandSelectionError):
    def __init__(self, band: int, bands: int):
        super().__init__(
            f'Band {band} is outside 0..{bands - 1}',
        )


class EmptyTrace(BandSelectionError):
    def __init__(self):
        super().__init__(
            'Selection report has no trace entries',
        )


class TooOldDependencyVersion(BandSelectionError):
    def __init__(
            self,
            package: str,
            version_needed: str,
            installed_version: str,
    ):
        super().__init__(
            f'Needed {package} {version_needed}+, '
            'actually installed is '
            f'{installed_version}',
        )
