from .evaluation import Evaluation
from .selection import Selection
from .utilities import Utilities


class Methods(
    Evaluation,
    Selection,
    Utilities,
):
    pass
