"""
Quandle Catalog

Resolves quandle names used on the command line and in config files:
T<n>, R<n>, S4, Alex(n;h) with h written like "T^2+T+1", and
Conj(G,k) for G one of S<k> or Z<n>.
"""

import re
from functools import lru_cache
from typing import Dict, List

from quandle_lab.algebra.groups import FiniteGroup, cyclic_group, symmetric_group
from quandle_lab.quandle.constructors import (
    alexander_quandle,
    conjugation_quandle,
    dihedral_quandle,
    s4_quandle,
    trivial_quandle,
)
from quandle_lab.quandle.core import Quandle

BUILTIN_NAMES: List[str] = [
    "T1",
    "T2",
    "T3",
    "R3",
    "R4",
    "R5",
    "S4",
    "Alex(2;T^2+T+1)",
    "Alex(2;T^2-1)",
    "Alex(3;T^2-1)",
    "Conj(S3,1)",
]

_SIMPLE = re.compile(r"^([TR])(\d+)$")
_ALEXANDER = re.compile(r"^Alex\((\d+);([^)]+)\)$")
_CONJUGATION = re.compile(r"^Conj\(([SZ])(\d+),(-?\d+)\)$")
_TERM = re.compile(r"^(-?)(\d*)\*?(T(?:\^(\d+))?)?$")


def parse_polynomial(text: str) -> List[int]:
    """
    Parse a polynomial in T into ascending coefficients

    "T^2+T+1" -> [1, 1, 1]; "T^2-1" -> [-1, 0, 1]; "2T+1" -> [1, 2]

    Raises:
        ValueError: If a term cannot be read
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("Empty polynomial")
    coefficients: Dict[int, int] = {}
    for term in compact.replace("-", "+-").split("+"):
        if not term:
            continue
        match = _TERM.match(term)
        if not match or not (match.group(2) or match.group(3)):
            raise ValueError(f"Cannot read polynomial term '{term}' in '{text}'")
        sign, digits, power, exponent = match.groups()
        value = int(digits) if digits else 1
        degree = 0 if not power else int(exponent or 1)
        coefficients[degree] = coefficients.get(degree, 0) + (-value if sign else value)
    if not coefficients:
        raise ValueError(f"Cannot read polynomial '{text}'")
    top = max(coefficients)
    return [coefficients.get(d, 0) for d in range(top + 1)]


def _group(kind: str, size: int) -> FiniteGroup:
    if kind == "S":
        if not 1 <= size <= 5:
            raise ValueError(f"Symmetric group S{size} is outside the supported range 1..5")
        return symmetric_group(size)
    return cyclic_group(size)


@lru_cache(maxsize=64)
def resolve_quandle(name: str) -> Quandle:
    """
    Build a quandle from its catalog name

    Args:
        name: Catalog name such as "R4", "S4" or "Alex(2;T^2+T+1)"

    Returns:
        The constructed Quandle

    Raises:
        ValueError: For unknown names or invalid parameters
    """
    key = name.strip()
    if key == "S4":
        return s4_quandle()

    match = _SIMPLE.match(key)
    if match:
        kind, size = match.group(1), int(match.group(2))
        return trivial_quandle(size) if kind == "T" else dihedral_quandle(size)

    match = _ALEXANDER.match(key)
    if match:
        return alexander_quandle(int(match.group(1)), parse_polynomial(match.group(2)))

    match = _CONJUGATION.match(key)
    if match:
        group = _group(match.group(1), int(match.group(2)))
        return conjugation_quandle(group, int(match.group(3)))

    raise ValueError(
        f"Unknown quandle '{name}'. Use T<n>, R<n>, S4, Alex(n;h) or Conj(G,k); "
        f"built-ins: {', '.join(BUILTIN_NAMES)}"
    )


def builtin_quandles() -> Dict[str, Quandle]:
    return {name: resolve_quandle(name) for name in BUILTIN_NAMES}
