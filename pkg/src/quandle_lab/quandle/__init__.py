"""quandle module"""

from quandle_lab.quandle.catalog import (
    BUILTIN_NAMES,
    builtin_quandles,
    parse_polynomial,
    resolve_quandle,
)
from quandle_lab.quandle.constructors import (
    S4_TABLE,
    alexander_quandle,
    conjugation_quandle,
    dihedral_quandle,
    format_polynomial,
    s4_quandle,
    subquandle,
    trivial_quandle,
)
from quandle_lab.quandle.core import Quandle, QuandleHom, verify_quandle
from quandle_lab.quandle.homs import find_homs, generating_set, is_isomorphic

__all__ = [
    "BUILTIN_NAMES",
    "Quandle",
    "QuandleHom",
    "S4_TABLE",
    "alexander_quandle",
    "builtin_quandles",
    "conjugation_quandle",
    "dihedral_quandle",
    "find_homs",
    "format_polynomial",
    "generating_set",
    "is_isomorphic",
    "parse_polynomial",
    "resolve_quandle",
    "s4_quandle",
    "subquandle",
    "trivial_quandle",
]
