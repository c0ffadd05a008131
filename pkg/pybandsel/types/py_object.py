import math
from enum import Enum
from json import dumps
from typing import Any
from typing import Dict
from typing import List
from typing import Union

import numpy as np


class PyObject:
    @staticmethod
    def json_float(value: float) -> Union[float, str]:
        """Infinite values as ``"inf"`` or ``"-inf"``, which ``float()``
        reads back. Strict JSON has no token for them."""
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value

    @staticmethod
    def default(obj) -> Union[str, int, float, Dict[str, Any], List[Any]]:
        if isinstance(obj, np.ndarray):
            if obj.size > 16:
                return f'ndarray{obj.shape}<{obj.dtype}>'
            return obj.tolist()
        if isinstance(obj, np.generic):
            return obj.item()
        if isinstance(obj, Enum):
            return repr(obj)
        if isinstance(obj, bytes):
            return repr(obj)
        if hasattr(obj, '__dict__'):
            return {
                '_': obj.__class__.__name__,
                **{
                    attr: vars(obj)[attr]
                    for attr in vars(obj)
                    if not attr.startswith('_')
                },
            }
        return {}

    def __str__(self) -> str:
        return dumps(
            self,
            indent=4,
            default=self.default,
            ensure_ascii=False,
        )
