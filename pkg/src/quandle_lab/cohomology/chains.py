"""
Chain Complexes

Rack, degenerate and quandle chain groups of a finite quandle with their
boundary matrices. Bases are k-tuples ordered lexicographically by element
index; a boundary matrix has one row per (k-1)-tuple and one column per
k-tuple, so row x is the coboundary of the characteristic cochain of x.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple, Union

import numpy as np

from quandle_lab.algebra.matrix import IntegerMatrix
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)

ChainTuple = Tuple[int, ...]


class Theory(str, Enum):
    """Which chain complex: all tuples, degenerate tuples, or their quotient"""

    R = "R"
    D = "D"
    Q = "Q"

    @classmethod
    def parse(cls, value: Union[str, "Theory"]) -> "Theory":
        if isinstance(value, Theory):
            return value
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValueError(f"Unknown theory '{value}' (expected R, D or Q)") from None


def is_degenerate(x: ChainTuple) -> bool:
    """True when two adjacent entries coincide"""
    return any(x[i] == x[i + 1] for i in range(len(x) - 1))


@dataclass(frozen=True)
class ChainBasis:
    """Ordered basis of C_k for one theory"""

    n: int
    degree: int
    theory: Theory
    tuples: Tuple[ChainTuple, ...]
    index: Dict[ChainTuple, int] = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def position(self, x: ChainTuple) -> int:
        return self.index[x]


@lru_cache(maxsize=256)
def _basis(n: int, degree: int, theory: Theory) -> ChainBasis:
    every = product(range(n), repeat=degree)
    if theory is Theory.R:
        tuples = list(every)
    elif theory is Theory.D:
        tuples = [x for x in every if is_degenerate(x)]
    else:
        tuples = [x for x in every if not is_degenerate(x)]
    return ChainBasis(n, degree, theory, tuple(tuples), {x: i for i, x in enumerate(tuples)})


def chain_basis(
    quandle: Quandle, degree: int, theory: Union[str, Theory] = Theory.Q
) -> ChainBasis:
    """
    Lexicographically ordered k-tuples spanning C_k

    Degree 0 is the single empty tuple for R and Q and nothing for D.

    Raises:
        ValueError: If degree is negative
    """
    if degree < 0:
        raise ValueError(f"Chain degree must be non-negative, got {degree}")
    return _basis(quandle.n, degree, Theory.parse(theory))


def boundary_terms(quandle: Quandle, x: ChainTuple) -> List[Tuple[int, ChainTuple]]:
    """
    Signed faces of the rack boundary of one tuple

    ∂(x1..xk) = Σ_{i=2..k} (-1)^i [(x1..x̂i..xk) - (x1∗xi, .., x(i-1)∗xi, x(i+1), .., xk)]
    """
    terms: List[Tuple[int, ChainTuple]] = []
    op = quandle.op
    for i in range(1, len(x)):
        sign = 1 if i % 2 == 1 else -1
        head, pivot, tail = x[:i], x[i], x[i + 1:]
        terms.append((sign, head + tail))
        terms.append((-sign, tuple(op[a][pivot] for a in head) + tail))
    return terms


@lru_cache(maxsize=128)
def _boundary(quandle: Quandle, degree: int, theory: Theory) -> IntegerMatrix:
    source = _basis(quandle.n, degree, theory)
    target = _basis(quandle.n, degree - 1, theory)
    entries = np.zeros((len(target), len(source)), dtype=object)
    if degree >= 2:
        for column, x in enumerate(source.tuples):
            for sign, face in boundary_terms(quandle, x):
                row = target.index.get(face)
                if row is not None:
                    entries[row, column] += sign
    logger.debug(
        f"Boundary ∂_{degree} ({theory.value}) of {quandle.name or 'quandle'}: "
        f"{len(target)}x{len(source)}"
    )
    return IntegerMatrix._wrap(entries)


def boundary_matrix(
    quandle: Quandle, degree: int, theory: Union[str, Theory] = Theory.Q
) -> IntegerMatrix:
    """
    Matrix of ∂_k : C_k → C_(k-1) in the chain-basis ordering

    Faces that leave the basis are dropped, which realizes the quotient
    C^Q = C^R / C^D; degenerate tuples only have degenerate faces, so
    nothing is lost for theory D.

    Args:
        quandle: The quandle X
        degree: k >= 1; ∂_1 is the zero map to C_0
        theory: R, D or Q

    Returns:
        IntegerMatrix of shape (|C_(k-1)|, |C_k|)

    Raises:
        ValueError: If degree < 1
    """
    if degree < 1:
        raise ValueError(f"Boundary degree must be >= 1, got {degree}")
    return _boundary(quandle, degree, Theory.parse(theory))
