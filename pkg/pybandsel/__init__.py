from .__version__ import __version__
from .band_selector import BandSelector
from .envi import load_cube
from .envi import load_ground_truth
from .envi import save_cube
from .envi import save_ground_truth
from .glcm_texture import band_homogeneity
from .glcm_texture import glcm
from .glcm_texture import homogeneity
from .info_metrics import entropy
from .info_metrics import histogram
from .info_metrics import joint_histogram
from .info_metrics import mutual_information
from .quantize import quantize_band
from .synthetic import generate_synthetic

__all__ = (
    '__version__',
    'band_homogeneity',
    'BandSelector',
    'entropy',
    'generate_synthetic',
    'glcm',
    'histogram',
    'homogeneity',
    'joint_histogram',
    'load_cube',
    'load_ground_truth',
    'mutual_information',
    'quantize_band',
    'save_cube',
    'save_ground_truth',
)
