"""cohomology module"""

from quandle_lab.cohomology.builtins import (
    BUILTIN_COCYCLES,
    alexander_weight_cocycle,
    builtin_names,
    parse_cochain,
    resolve_cocycle,
)
from quandle_lab.cohomology.chains import (
    ChainBasis,
    Theory,
    boundary_matrix,
    boundary_terms,
    chain_basis,
    is_degenerate,
)
from quandle_lab.cohomology.cochains import (
    Cochain,
    coboundary,
    format_tuple,
    is_cocycle,
    parse_tuple,
    require_cocycle,
)
from quandle_lab.cohomology.group_cocycles import (
    group_2cocycle_basis,
    is_group_2cocycle,
    quandle_cocycle_from_group_cocycle,
)
from quandle_lab.cohomology.groups import (
    CohomologyGroup,
    HomologyGroup,
    Variant,
    cocycle_basis,
    cohomology,
    describe_summands,
    homology,
    rational_dimension,
)
from quandle_lab.cohomology.pullback import evaluation_homs, pullback_cocycle
from quandle_lab.cohomology.witness import are_cohomologous, coboundary_witness

__all__ = [
    "BUILTIN_COCYCLES",
    "ChainBasis",
    "Cochain",
    "CohomologyGroup",
    "HomologyGroup",
    "Theory",
    "Variant",
    "alexander_weight_cocycle",
    "are_cohomologous",
    "boundary_matrix",
    "boundary_terms",
    "builtin_names",
    "chain_basis",
    "coboundary",
    "coboundary_witness",
    "cocycle_basis",
    "cohomology",
    "describe_summands",
    "evaluation_homs",
    "format_tuple",
    "group_2cocycle_basis",
    "homology",
    "is_cocycle",
    "is_degenerate",
    "is_group_2cocycle",
    "parse_cochain",
    "parse_tuple",
    "pullback_cocycle",
    "quandle_cocycle_from_group_cocycle",
    "rational_dimension",
    "require_cocycle",
    "resolve_cocycle",
]
