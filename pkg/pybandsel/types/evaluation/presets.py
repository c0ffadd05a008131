from enum import Enum


class ThresholdPreset(Enum):
    # in bits, from strict to permissive
    TABLE = (0.0, -0.0035, -0.004, -0.005, -0.01, -0.02)


class SnapshotPreset(Enum):
    EVERY_ACCEPTANCE = ()
    # retained-band counts evaluated by `sweep --snapshots table`
    TABLE = (2, 3, 4, 12, 14, 18, 20, 25, 35, 36, 40, 45, 50, 53, 60, 70,
             75, 80, 83)
