"""
Braid Colorings and State Sums

Quandle colorings of braid closures and the 2-cocycle state-sum
invariant Φ(L) = Σ_C Π_τ φ(x_τ, y_τ)^ε(τ), valued in Z[A].

A coloring is the tuple of colors on the top strands. At a positive
crossing σ_i the pair (a, b) on positions (i, i+1) becomes (b, a∗b) and
contributes φ(a, b); at σ_i⁻¹ it becomes (b∗̄a, a) and contributes
-φ(b∗̄a, a).
"""

from itertools import product
from typing import List, Mapping, Optional, Sequence, Tuple

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.cochains import Cochain, require_cocycle
from quandle_lab.exceptions import CocycleError, PresentationError
from quandle_lab.knots.braids import BraidWord
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.logger import get_logger
from quandle_lab.utils.parallel import partitioned_sum

logger = get_logger(__name__)

Coloring = Tuple[int, ...]


def propagate(braid: BraidWord, quandle: Quandle, top: Sequence[int]) -> Coloring:
    """Push colors from the top of the braid to the bottom, letter by letter"""
    if len(top) != braid.strands:
        raise PresentationError(f"Expected {braid.strands} colors, got {len(top)}")
    colors = list(top)
    for letter in braid.letters:
        i = abs(letter) - 1
        a, b = colors[i], colors[i + 1]
        if letter > 0:
            colors[i], colors[i + 1] = b, quandle.op[a][b]
        else:
            colors[i], colors[i + 1] = quandle.inv_op[b][a], a
    return tuple(colors)


def _weight(
    braid: BraidWord, quandle: Quandle, top: Coloring, values: Mapping[Tuple[int, ...], int]
) -> int:
    colors = list(top)
    exponent = 0
    for letter in braid.letters:
        i = abs(letter) - 1
        a, b = colors[i], colors[i + 1]
        if letter > 0:
            exponent += values.get((a, b), 0)
            colors[i], colors[i + 1] = b, quandle.op[a][b]
        else:
            under = quandle.inv_op[b][a]
            exponent -= values.get((under, a), 0)
            colors[i], colors[i + 1] = under, a
    return exponent


def _tuples_with_first(quandle: Quandle, strands: int, first: int) -> List[Coloring]:
    return [(first,) + rest for rest in product(quandle.elements, repeat=strands - 1)]


def colorings(braid: BraidWord, quandle: Quandle) -> List[Coloring]:
    """All top tuples fixed by the braid, i.e. colorings of the closure, in lexicographic order"""
    found = [
        top
        for top in product(quandle.elements, repeat=braid.strands)
        if propagate(braid, quandle, top) == top
    ]
    logger.debug(f"{len(found)} colorings of braid '{braid}' by {quandle.name}")
    return found


def coloring_count(braid: BraidWord, quandle: Quandle) -> int:
    return len(colorings(braid, quandle))


def state_sum(
    braid: BraidWord,
    quandle: Quandle,
    cocycle: Cochain,
    workers: Optional[int] = None,
) -> GroupRingElement:
    """
    2-cocycle state sum of the braid closure

    Args:
        braid: Braid whose closure is the link
        quandle: Coloring quandle X
        cocycle: Quandle 2-cocycle φ; its coefficient group is A
        workers: Thread cap for the enumeration

    Returns:
        Σ over colorings of t^(sum of crossing weights) in Z[A]

    Raises:
        CocycleError: If φ is not a quandle 2-cocycle on X
    """
    if not cocycle.quandle_flag:
        raise CocycleError("Crossing weights must come from a quandle cocycle")
    require_cocycle(cocycle, quandle, 2)
    modulus = cocycle.coefficients.modulus
    values = cocycle.as_dict()

    def work(first: int) -> GroupRingElement:
        terms = []
        for top in _tuples_with_first(quandle, braid.strands, first):
            if propagate(braid, quandle, top) == top:
                terms.append((_weight(braid, quandle, top, values), 1))
        return GroupRingElement(modulus, tuple(terms))

    total = partitioned_sum(
        work,
        list(quandle.elements),
        lambda x, y: x + y,
        GroupRingElement.zero(modulus),
        workers,
    )
    logger.debug(f"State sum of '{braid}' over {quandle.name}: {total}")
    return total
