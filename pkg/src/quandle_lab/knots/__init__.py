"""knots module"""

from quandle_lab.knots.braids import KNOTS, BraidWord, resolve_braid
from quandle_lab.knots.coloring import (
    Coloring,
    coloring_count,
    colorings,
    propagate,
    state_sum,
)
from quandle_lab.knots.linking import linking_matrix, oracle_R4, oracle_T2, oracle_Tk

__all__ = [
    "KNOTS",
    "BraidWord",
    "Coloring",
    "coloring_count",
    "colorings",
    "linking_matrix",
    "oracle_R4",
    "oracle_T2",
    "oracle_Tk",
    "propagate",
    "resolve_braid",
    "state_sum",
]
