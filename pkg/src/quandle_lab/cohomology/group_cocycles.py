"""
Group Cocycles

Inhomogeneous 2-cocycles of finite groups and the quandle 2-cocycles they
induce on conjugation quandles: φ(p, q) = α(p, q) - α(q, q⁻¹pq).
"""

from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.algebra.groups import FiniteGroup
from quandle_lab.algebra.matrix import IntegerMatrix, left_kernel
from quandle_lab.cohomology.cochains import Cochain
from quandle_lab.exceptions import CocycleError

GroupCochain = Mapping[Tuple[int, int], int]


def _value(alpha: GroupCochain, x: int, y: int) -> int:
    return int(alpha.get((x, y), 0))


def is_group_2cocycle(
    group: FiniteGroup,
    alpha: GroupCochain,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
) -> bool:
    """α(x,y) + α(xy,z) = α(x,yz) + α(y,z) for every triple, read in A"""
    coefficients = coefficients or AbelianCyclicCoefficients()
    n = group.order
    for x, y, z in product(range(n), repeat=3):
        defect = (
            _value(alpha, x, y)
            + _value(alpha, group.mul(x, y), z)
            - _value(alpha, x, group.mul(y, z))
            - _value(alpha, y, z)
        )
        if coefficients.reduce(defect) != 0:
            return False
    return True


def group_2cocycle_basis(
    group: FiniteGroup, coefficients: Optional[AbelianCyclicCoefficients] = None
) -> List[Dict[Tuple[int, int], int]]:
    """
    Generators of Z^2(G; A)

    Rows are indexed by pairs (x, y) and columns by triples (a, b, c); the
    kernel of the resulting coboundary map is read off as a left kernel.
    """
    coefficients = coefficients or AbelianCyclicCoefficients()
    n = group.order
    pairs = list(product(range(n), repeat=2))
    rows = {pair: i for i, pair in enumerate(pairs)}
    entries = [[0] * (n**3) for _ in pairs]
    for column, (a, b, c) in enumerate(product(range(n), repeat=3)):
        entries[rows[(a, b)]][column] += 1
        entries[rows[(group.mul(a, b), c)]][column] += 1
        entries[rows[(a, group.mul(b, c))]][column] -= 1
        entries[rows[(b, c)]][column] -= 1

    kernel = left_kernel(IntegerMatrix(entries), coefficients.modulus)
    basis = []
    for i in range(kernel.rows):
        row = kernel.row(i)
        alpha = {pairs[j]: coefficients.reduce(v) for j, v in enumerate(row)}
        alpha = {key: v for key, v in alpha.items() if v}
        if alpha:
            basis.append(alpha)
    return basis


def quandle_cocycle_from_group_cocycle(
    group: FiniteGroup,
    alpha: GroupCochain,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
) -> Cochain:
    """
    Quandle 2-cocycle on conjugation_quandle(group, 1)

    Elements keep their group indices, and p∗q = q⁻¹pq.

    Raises:
        CocycleError: If alpha is not a group 2-cocycle
    """
    coefficients = coefficients or AbelianCyclicCoefficients()
    if not is_group_2cocycle(group, alpha, coefficients):
        raise CocycleError(f"Not a 2-cocycle on {group.name or 'the group'}")
    values = {}
    for p, q in product(range(group.order), repeat=2):
        if p == q:
            continue
        conjugate = group.mul(group.mul(group.inv(q), p), q)
        value = _value(alpha, p, q) - _value(alpha, q, conjugate)
        if coefficients.reduce(value):
            values[(p, q)] = value
    return Cochain.from_mapping(2, values, coefficients)
