from .cooccurrence_matrix import CooccurrenceMatrix
from .glcm_params import GlcmParams
from .histogram import Histogram
from .joint_histogram import JointHistogram

__all__ = (
    'CooccurrenceMatrix',
    'GlcmParams',
    'Histogram',
    'JointHistogram',
)
