import re
from typing import Tuple

from .exceptions import TooOldDependencyVersion


class Environment:
    # graycoprops replaced greycoprops in this release
    _REQUIRED_SKIMAGE_VERSION = '0.19.0'
    _REQUIRED_NUMPY_VERSION = '1.17.0'

    @staticmethod
    def version_tuple(v: str) -> Tuple[int, ...]:
        list_version = []
        for vmj in v.split('.'):
            list_d = re.findall('[0-9]+', vmj)
            for vmn in list_d:
                list_version.append(int(vmn))
        return tuple(list_version)

    def check_environment(self):
        import numpy
        import skimage
        for name, installed, needed in (
            ('numpy', numpy.__version__, self._REQUIRED_NUMPY_VERSION),
            ('scikit-image', skimage.__version__,
             self._REQUIRED_SKIMAGE_VERSION),
        ):
            if self.version_tuple(installed) < self.version_tuple(needed):
                raise TooOldDependencyVersion(
                    name,
                    needed,
                    installed,
                )
