"""
Quandle Constructors

Standard families: trivial, dihedral, Alexander and conjugation quandles,
the tetrahedral quandle S4, and subquandles of any of them.
"""

from math import gcd
from typing import List, Sequence, Tuple

from quandle_lab.algebra.groups import FiniteGroup
from quandle_lab.quandle.core import Quandle, verify_quandle

S4_TABLE: Tuple[Tuple[int, ...], ...] = (
    (0, 2, 3, 1),
    (3, 1, 0, 2),
    (1, 3, 2, 0),
    (2, 0, 1, 3),
)


def trivial_quandle(n: int) -> Quandle:
    """x∗y = x"""
    if n < 1:
        raise ValueError("Trivial quandle needs at least one element")
    return verify_quandle([[x] * n for x in range(n)], name=f"T{n}")


def dihedral_quandle(n: int) -> Quandle:
    """i∗j = 2j - i (mod n)"""
    if n < 1:
        raise ValueError("Dihedral quandle needs at least one element")
    return verify_quandle([[(2 * j - i) % n for j in range(n)] for i in range(n)], name=f"R{n}")


def s4_quandle() -> Quandle:
    """Tetrahedral quandle: rotations of the faces of a tetrahedron"""
    return verify_quandle(S4_TABLE, name="S4")


def format_polynomial(coefficients: Sequence[int], variable: str = "T") -> str:
    """Descending-degree rendering, e.g. [1, 1, 1] -> "T^2+T+1" """
    parts: List[str] = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = coefficients[degree]
        if c == 0:
            continue
        magnitude = abs(c)
        if degree == 0:
            body = str(magnitude)
        else:
            power = variable if degree == 1 else f"{variable}^{degree}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        sign = "-" if c < 0 else "+"
        parts.append(body if not parts and c > 0 else f"{sign}{body}")
    return "".join(parts) or "0"


def _element_label(coefficients: Sequence[int]) -> str:
    parts = []
    for degree, c in enumerate(coefficients):
        if c == 0:
            continue
        if degree == 0:
            parts.append(str(c))
        else:
            power = "T" if degree == 1 else f"T^{degree}"
            parts.append(power if c == 1 else f"{c}{power}")
    return "+".join(parts) or "0"


def alexander_quandle(n: int, h: Sequence[int]) -> Quandle:
    """
    Alexander quandle Z_n[T, T^-1]/(h(T)) with a∗b = T·a + (1-T)·b

    Elements are the residues of degree < deg h with coefficients in
    [0, n); the residue c_0 + c_1 T + ... is stored at index sum c_i n^i and
    labeled as a polynomial in T.

    Args:
        n: Coefficient modulus, at least 2
        h: Coefficients of h in ascending degree, e.g. [1, 1, 1] for T^2+T+1

    Raises:
        ValueError: If deg h < 1 or the leading or constant coefficient of h
            is not invertible mod n
    """
    if n < 2:
        raise ValueError("Alexander quandle needs a modulus n >= 2")
    coefficients = [int(c) % n for c in h]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    degree = len(coefficients) - 1
    if degree < 1:
        raise ValueError("Alexander quandle needs a polynomial of degree >= 1")
    if gcd(coefficients[0], n) != 1 or gcd(coefficients[-1], n) != 1:
        raise ValueError(
            f"Leading and constant coefficients of {format_polynomial(list(h))} "
            f"must be invertible mod {n}"
        )

    inverse_lead = pow(coefficients[-1], -1, n)
    residues = [tuple((i // n**k) % n for k in range(degree)) for i in range(n**degree)]
    index = {r: i for i, r in enumerate(residues)}

    def times_t(r: Tuple[int, ...]) -> Tuple[int, ...]:
        shifted = [0] + list(r[:-1])
        top = r[-1]
        return tuple((shifted[i] - top * coefficients[i] * inverse_lead) % n for i in range(degree))

    def star(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        difference = times_t(tuple((x - y) % n for x, y in zip(a, b)))
        return tuple((x + y) % n for x, y in zip(difference, b))

    table = [[index[star(a, b)] for b in residues] for a in residues]
    name = f"Alex({n};{format_polynomial(list(h))})"
    return verify_quandle(table, name=name, labels=[_element_label(r) for r in residues])


def conjugation_quandle(group: FiniteGroup, k: int = 1) -> Quandle:
    """k-fold conjugation quandle a∗b = b^-k a b^k on the elements of a group"""
    table = [
        [group.mul(group.mul(group.power(b, -k), a), group.power(b, k)) for b in range(group.order)]
        for a in range(group.order)
    ]
    labels = list(group.labels) if group.labels else []
    return verify_quandle(table, name=f"Conj({group.name},{k})", labels=labels)


def subquandle(quandle: Quandle, elements: Sequence[int], name: str = "") -> Quandle:
    """
    Restrict to a ∗-closed subset, re-indexed in the given order

    Raises:
        ValueError: If the subset is not closed under ∗ and ∗̄
    """
    chosen = list(dict.fromkeys(elements))
    position = {x: i for i, x in enumerate(chosen)}
    table = []
    for a in chosen:
        row = []
        for b in chosen:
            if quandle.op[a][b] not in position or quandle.inv_op[a][b] not in position:
                raise ValueError(f"Subset is not closed: {a}*{b} leaves it")
            row.append(position[quandle.op[a][b]])
        table.append(row)
    labels = [quandle.label(x) for x in chosen]
    return verify_quandle(table, name=name or f"{quandle.name}|{len(chosen)}", labels=labels)
