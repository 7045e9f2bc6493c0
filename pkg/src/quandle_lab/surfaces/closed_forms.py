"""
Closed Forms for the Twist-Spun Trefoil

With z = y1∗y2, the state sums of the 2-twist-spun trefoil and of its
reverse reduce to sums over the admissible generator pairs (y1, y2) of
six signed cocycle values each.
"""

from typing import List, Tuple

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.cochains import Cochain, require_cocycle
from quandle_lab.quandle.core import Quandle

Triple = Tuple[int, int, int]


def admissible_pairs(quandle: Quandle) -> List[Tuple[int, int]]:
    """Pairs with y2 = (y1∗y2)∗y1 and y2 = (y2∗y1)∗y1"""
    op = quandle.op
    return [
        (y1, y2)
        for y1 in quandle.elements
        for y2 in quandle.elements
        if op[op[y1][y2]][y1] == y2 and op[op[y2][y1]][y1] == y2
    ]


def _signed_triples(
    quandle: Quandle, y1: int, y2: int, reversed_form: bool
) -> List[Tuple[int, Triple]]:
    z = quandle.op[y1][y2]
    if reversed_form:
        return [
            (-1, (y2, z, y1)),
            (-1, (y2, y1, y2)),
            (-1, (y1, y2, z)),
            (1, (z, y2, y1)),
            (1, (y2, z, y2)),
            (1, (z, y1, y2)),
        ]
    return [
        (1, (z, y1, y2)),
        (1, (z, y2, z)),
        (1, (y2, z, y1)),
        (-1, (y1, z, y2)),
        (-1, (z, y1, z)),
        (-1, (y1, y2, z)),
    ]


def closed_form_terms(
    quandle: Quandle, cocycle: Cochain, y1: int, y2: int, reversed_form: bool = False
) -> List[int]:
    """The six signed values ±θ(triple) of one admissible pair, in display order"""
    signed = _signed_triples(quandle, y1, y2, reversed_form)
    return [sign * cocycle.value(triple) for sign, triple in signed]


def _closed_form(
    quandle: Quandle, cocycle: Cochain, reversed_form: bool, check: bool
) -> GroupRingElement:
    if check:
        require_cocycle(cocycle, quandle, 3)
    modulus = cocycle.coefficients.modulus
    terms = [
        (sum(closed_form_terms(quandle, cocycle, y1, y2, reversed_form)), 1)
        for y1, y2 in admissible_pairs(quandle)
    ]
    return GroupRingElement(modulus, tuple(terms))


def twist_spun_trefoil_closed_form(
    quandle: Quandle, cocycle: Cochain, check: bool = True
) -> GroupRingElement:
    """
    Σ over admissible (y1, y2) of t^e with z = y1∗y2 and
    e = θ(z,y1,y2) + θ(z,y2,z) + θ(y2,z,y1) - θ(y1,z,y2) - θ(z,y1,z) - θ(y1,y2,z)
    """
    return _closed_form(quandle, cocycle, False, check)


def reversed_closed_form(
    quandle: Quandle, cocycle: Cochain, check: bool = True
) -> GroupRingElement:
    """The same sum for the orientation-reversed surface"""
    return _closed_form(quandle, cocycle, True, check)
