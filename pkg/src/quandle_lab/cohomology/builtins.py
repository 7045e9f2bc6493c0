"""
Built-in Cocycles

Named cocycles on the small quandles used throughout the library, a
parser for cochains written as sums of characteristic functions
("-chi(0,1,0)+2chi(0,2,1)"), and the Alexander-quandle weight cocycles
obtained by pulling back along T ↦ 1.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.cohomology.cochains import Cochain, check_elements
from quandle_lab.cohomology.pullback import evaluation_homs, pullback_cocycle
from quandle_lab.quandle.catalog import parse_polynomial, resolve_quandle
from quandle_lab.quandle.core import Quandle

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(?:chi|χ)_?\(([^)]*)\)")


@dataclass(frozen=True)
class BuiltinCocycle:
    """A named cochain with the quandle it lives on and its natural coefficients"""

    name: str
    quandle: str
    coefficients: str
    expression: str
    description: str = ""


BUILTIN_COCYCLES: Dict[str, BuiltinCocycle] = {
    entry.name: entry
    for entry in (
        BuiltinCocycle(
            "eta1",
            "R3",
            "Z3",
            "-chi(0,1,0)+chi(0,2,0)-chi(0,2,1)+chi(1,0,1)+chi(1,0,2)+chi(2,0,2)+chi(2,1,2)",
            "generator of H^3(R3; Z3); separates the 2-twist-spun trefoil from its reverse",
        ),
        BuiltinCocycle(
            "eta1_lemma",
            "R3",
            "Z3",
            "-chi(0,1,0)+chi(0,2,0)+2chi(0,2,1)+chi(1,0,1)+chi(1,0,2)+chi(2,0,2)+chi(2,1,2)",
            "eta1 with +2 on (0,2,1); equal to eta1 over Z3",
        ),
        BuiltinCocycle("eta2", "R3", "Z", "-chi(0,1,0)+chi(0,2,1)-chi(1,0,1)+chi(1,2,0)"),
        BuiltinCocycle(
            "eta3",
            "R3",
            "Z",
            "chi(0,1,0)+chi(0,1,2)-chi(0,2,0)-chi(0,2,1)-chi(1,0,2)+chi(1,2,1)",
        ),
        BuiltinCocycle(
            "eta4",
            "R3",
            "Z",
            "chi(0,1,0)+chi(0,1,2)-chi(0,2,0)-chi(0,2,1)+chi(2,0,1)-chi(2,1,2)",
        ),
        BuiltinCocycle("eta5", "R3", "Z", "chi(0,1,2)-chi(0,2,0)-chi(2,0,2)+chi(2,1,0)"),
        BuiltinCocycle(
            "phi_S4",
            "S4",
            "Z2",
            "chi(0,1)+chi(1,0)+chi(2,0)+chi(0,2)+chi(1,2)+chi(2,1)",
            "nontrivial 2-cocycle of S4; the trefoil invariant is 4+12t",
        ),
        BuiltinCocycle("lambda1", "R4", "Z", "chi(0,1)+chi(0,3)"),
        BuiltinCocycle("lambda2", "R4", "Z", "chi(2,1)+chi(2,3)"),
        BuiltinCocycle("f01", "R4", "Z", "chi(0,1)+chi(0,3)"),
        BuiltinCocycle("f21", "R4", "Z", "chi(2,1)+chi(2,3)"),
        BuiltinCocycle("f10", "R4", "Z", "chi(1,0)+chi(1,2)"),
        BuiltinCocycle("f30", "R4", "Z", "chi(3,0)+chi(3,2)"),
    )
}

ALEXANDER_EXAMPLE_WEIGHTS: Dict[Tuple[int, int], int] = {(0, 1): 1, (0, 2): 2, (1, 2): 3}


def parse_cochain(
    text: str,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
    quandle_flag: bool = True,
) -> Cochain:
    """
    Read a sum of characteristic functions

    Args:
        text: e.g. "-chi(0,1,0) + 2chi(0,2,1)"; "χ" is accepted for "chi"
        coefficients: Coefficient group, Z by default
        quandle_flag: Whether the result is a quandle cochain

    Raises:
        ValueError: If the text is not such a sum or mixes tuple lengths
    """
    coefficients = coefficients or AbelianCyclicCoefficients()
    compact = text.strip()
    if compact in ("", "0"):
        raise ValueError("An explicit sum of chi(...) terms is required")

    values: Dict[Tuple[int, ...], int] = {}
    position = 0
    for match in _TERM.finditer(compact):
        gap = compact[position:match.start()].strip()
        if gap or (position and not match.group(1)):
            raise ValueError(f"Cannot read cochain expression '{text}'")
        position = match.end()
        sign, digits, body = match.groups()
        multiplicity = int(digits) if digits else 1
        if sign == "-":
            multiplicity = -multiplicity
        key = tuple(int(part) for part in body.split(",")) if body.strip() else ()
        values[key] = values.get(key, 0) + multiplicity
    if position != len(compact) or not values:
        raise ValueError(f"Cannot read cochain expression '{text}'")

    degrees = {len(key) for key in values}
    if len(degrees) != 1:
        raise ValueError(f"Cochain expression '{text}' mixes tuple lengths")
    return Cochain.from_mapping(degrees.pop(), values, coefficients, quandle_flag)


def alexander_weight_cocycle(
    n: int,
    h: Sequence[int],
    weights: Mapping[Tuple[int, int], int],
    coefficients: Optional[AbelianCyclicCoefficients] = None,
) -> Cochain:
    """
    Pull Σ w_ij χ_(i,j) on the trivial quandle T_n back to Z_n[T, T^-1]/(h)

    Every 2-cochain on a trivial quandle is a cocycle, so the result is a
    2-cocycle whenever the T ↦ 1 map exists.

    Raises:
        ValueError: If n does not divide h(1)
    """
    coefficients = coefficients or AbelianCyclicCoefficients()
    homs = [hom for hom in evaluation_homs(n, h) if hom.target.name == f"T{n}"]
    if not homs:
        raise ValueError(f"No map T -> 1 exists: {n} does not divide h(1)")
    base = Cochain.from_mapping(2, dict(weights), coefficients)
    return pullback_cocycle(homs[0], base)


def builtin_names() -> List[str]:
    return list(BUILTIN_COCYCLES) + ["alex_weight"]


def _same_quandle(quandle: Quandle, name: str) -> bool:
    return resolve_quandle(name).op == quandle.op


def resolve_cocycle(
    name: str,
    quandle: Quandle,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
) -> Cochain:
    """
    Look up a built-in cocycle or parse a chi(...) expression

    "alex_weight" is χ01 + 2χ02 + 3χ12 on T_n pulled back to an Alexander
    quandle along T ↦ 1; the quandle name must then be Alex(n;h).

    Args:
        name: Built-in name or cochain expression
        quandle: Quandle the cochain must live on
        coefficients: Overrides the built-in's natural coefficient group

    Raises:
        ValueError: If the name is unknown or belongs to another quandle
    """
    key = name.strip()
    if key in BUILTIN_COCYCLES:
        entry = BUILTIN_COCYCLES[key]
        if not _same_quandle(quandle, entry.quandle):
            raise ValueError(f"Cocycle '{key}' lives on {entry.quandle}, not on {quandle.name}")
        chosen = coefficients or AbelianCyclicCoefficients.parse(entry.coefficients)
        return parse_cochain(entry.expression, chosen)

    if key == "alex_weight":
        match = re.match(r"^Alex\((\d+);([^)]+)\)$", quandle.name)
        if not match:
            raise ValueError("alex_weight needs an Alexander quandle Alex(n;h)")
        return alexander_weight_cocycle(
            int(match.group(1)),
            parse_polynomial(match.group(2)),
            ALEXANDER_EXAMPLE_WEIGHTS,
            coefficients,
        )

    if "chi" in key or "χ" in key:
        cochain = parse_cochain(key, coefficients)
        check_elements(cochain, quandle)
        return cochain

    raise ValueError(
        f"Unknown cocycle '{name}'. Built-ins: {', '.join(builtin_names())}; "
        "or give an expression such as 'chi(0,1)+chi(0,3)'"
    )
