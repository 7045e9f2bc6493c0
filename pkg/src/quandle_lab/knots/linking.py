"""
Linking Numbers and Closed Forms

Pairwise linking numbers of braid closures, and the closed-form state
sums they determine for trivial quandles and for R4 with the λ-cocycles.
"""

from itertools import combinations, product
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.algebra.matrix import IntegerMatrix
from quandle_lab.knots.braids import BraidWord

LinkingMatrix = Sequence[Sequence[int]]
LinkingInput = Union[LinkingMatrix, IntegerMatrix]


def linking_matrix(braid: BraidWord) -> IntegerMatrix:
    """
    Symmetric matrix of pairwise linking numbers of the closure components

    Component order follows braid.components(). lk(K_i, K_j) is half the
    signed number of letters whose two strands belong to K_i and K_j.
    """
    components = braid.components()
    owner = {p: c for c, cycle in enumerate(components) for p in cycle}
    count = len(components)
    signed = [[0] * count for _ in range(count)]
    occupant = [owner[p] for p in range(braid.strands)]
    for letter in braid.letters:
        i = abs(letter) - 1
        left, right = occupant[i], occupant[i + 1]
        if left != right:
            sign = 1 if letter > 0 else -1
            signed[left][right] += sign
            signed[right][left] += sign
        occupant[i], occupant[i + 1] = right, left
    return IntegerMatrix([[x // 2 for x in row] for row in signed], cols=count)


def _pairs(lk: LinkingMatrix) -> List[Tuple[int, int, int]]:
    size = len(lk)
    return [(a, b, int(lk[a][b])) for a, b in combinations(range(size), 2)]


def _as_rows(lk: LinkingInput) -> List[List[int]]:
    return lk.to_list() if isinstance(lk, IntegerMatrix) else [list(row) for row in lk]


def oracle_Tk(
    lk: LinkingInput,
    k: int,
    weights: Mapping[Tuple[int, int], int],
    exponent_modulus: Optional[int] = None,
) -> GroupRingElement:
    """
    State sum over the trivial quandle T_k from linking numbers alone

    Components are monochromatic; for a color assignment c the exponent is
    Σ_{a<b} lk(a, b)·(w(c(a), c(b)) + w(c(b), c(a))).
    """
    rows = _as_rows(lk)
    pairs = _pairs(rows)
    terms = []
    for assignment in product(range(k), repeat=len(rows)):
        exponent = 0
        for a, b, value in pairs:
            x, y = assignment[a], assignment[b]
            exponent += value * (weights.get((x, y), 0) + weights.get((y, x), 0))
        terms.append((exponent, 1))
    return GroupRingElement(exponent_modulus, tuple(terms))


def oracle_T2(lk: LinkingInput) -> GroupRingElement:
    """T_2 with φ = χ_(0,1): a knot gives 2, a 2-component link 2(1 + t^lk)"""
    return oracle_Tk(lk, 2, {(0, 1): 1})


def oracle_R4(lk: LinkingInput, u: int, v: int) -> GroupRingElement:
    """
    R_4 with φ = λ1^u λ2^v: 2^n Σ_{A ⊆ K} t^((u+v)·lk(A, K∖A)/2)

    Raises:
        ValueError: If some pairwise linking number is odd
    """
    rows = _as_rows(lk)
    size = len(rows)
    for a, b, value in _pairs(rows):
        if value % 2:
            raise ValueError(f"Linking number lk({a},{b}) = {value} is odd")
    terms = []
    for mask in range(2**size):
        across = sum(
            rows[a][b]
            for a in range(size)
            for b in range(size)
            if (mask >> a) & 1 and not (mask >> b) & 1
        )
        terms.append(((u + v) * across // 2, 2**size))
    return GroupRingElement(None, tuple(terms))
