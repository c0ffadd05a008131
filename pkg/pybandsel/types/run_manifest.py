import hashlib
import json
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

from ..__version__ import __version__
from .py_object import PyObject


class RunManifest(PyObject):
    """Record of one CLI run: parameters, input digests and outputs."""

    def __init__(
        self,
        command: str,
        parameters: Dict[str, Any],
        seed: Optional[int] = None,
    ):
        self.command = command
        self.parameters = parameters
        self.seed = seed
        self.inputs: Dict[str, str] = {}
        self.outputs: List[str] = []
        self.extra: Dict[str, Any] = {}

    @staticmethod
    def digest(path) -> str:
        sha = hashlib.sha256()
        with open(path, 'rb') as f:
            for chunk in iter(lambda: f.read(1 << 20), b''):
                sha.update(chunk)
        return sha.hexdigest()

    def add_input(self, path) -> None:
        self.inputs[str(path)] = self.digest(path)

    def add_output(self, path) -> None:
        self.outputs.append(str(path))

    def to_dict(self) -> dict:
        return {
            'command': self.command,
            'parameters': self.parameters,
            'inputs': dict(sorted(self.inputs.items())),
            'outputs': list(self.outputs),
            'seed': self.seed,
            'version': __version__,
            'extra': self.extra,
        }

    def write(self, path) -> Path:
        path = Path(path)
        path.write_text(
            json.dumps(self.to_dict(), indent=2, allow_nan=False) + '\n',
            encoding='utf-8',
        )
        return path
