"""
Pullback Cocycles

Pull cochains back along quandle homomorphisms, and the evaluation maps
from Alexander quandles onto trivial and dihedral quandles.
"""

from typing import List, Sequence

from quandle_lab.cohomology.cochains import Cochain, all_tuples, check_elements
from quandle_lab.quandle.constructors import (
    alexander_quandle,
    dihedral_quandle,
    trivial_quandle,
)
from quandle_lab.quandle.core import QuandleHom


def pullback_cocycle(hom: QuandleHom, cochain: Cochain) -> Cochain:
    """(h^♯f)(x1..xk) = f(h(x1)..h(xk)), a cochain on the source quandle"""
    check_elements(cochain, hom.target)
    table = cochain.as_dict()
    values = {}
    for x in all_tuples(hom.source, cochain.degree):
        value = table.get(tuple(hom(a) for a in x), 0)
        if value:
            values[x] = value
    return Cochain.from_mapping(cochain.degree, values, cochain.coefficients, cochain.quandle_flag)


def _digits(index: int, n: int, length: int) -> List[int]:
    return [(index // n**k) % n for k in range(length)]


def _evaluate(coefficients: Sequence[int], point: int, n: int) -> int:
    return sum(c * point**i for i, c in enumerate(coefficients)) % n


def evaluation_homs(n: int, h: Sequence[int]) -> List[QuandleHom]:
    """
    Surjections from Z_n[T, T^-1]/(h) given by f(T) ↦ f(1) and f(T) ↦ f(-1)

    The first lands on the trivial quandle T_n and exists when n | h(1); the
    second lands on the dihedral quandle R_n and exists when n | h(-1).

    Args:
        n: Coefficient modulus, at least 2
        h: Ascending coefficients of h

    Returns:
        The homomorphisms that exist, T ↦ 1 first

    Raises:
        ValueError: If n < 2
    """
    if n < 2:
        raise ValueError(f"Evaluation maps need a modulus n >= 2, got {n}")
    source = alexander_quandle(n, h)
    degree = len(h) - 1
    while degree > 0 and h[degree] % n == 0:
        degree -= 1
    residues = [_digits(i, n, degree) for i in source.elements]

    homs: List[QuandleHom] = []
    if _evaluate(h, 1, n) == 0:
        mapping = tuple(_evaluate(r, 1, n) for r in residues)
        homs.append(QuandleHom(source, trivial_quandle(n), mapping))
    if _evaluate(h, -1, n) == 0:
        mapping = tuple(_evaluate(r, -1, n) for r in residues)
        homs.append(QuandleHom(source, dihedral_quandle(n), mapping))
    return homs
