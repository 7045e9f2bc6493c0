"""surfaces module"""

from quandle_lab.surfaces.closed_forms import (
    admissible_pairs,
    closed_form_terms,
    reversed_closed_form,
    twist_spun_trefoil_closed_form,
)
from quandle_lab.surfaces.presentation import (
    Relation,
    SurfaceBraidPresentation,
    WhiteVertex,
    colorings_of_presentation,
    surface_state_sum,
    surface_tuple_action,
)
from quandle_lab.surfaces.presets import (
    TWIST_SPUN_TREFOIL,
    TWIST_SPUN_TREFOIL_REVERSED,
    builtin_presets,
    resolve_preset,
)
from quandle_lab.surfaces.triple_linking import (
    TripleLinkingData,
    solve_ab,
    three_component_oracle,
    triple_linking_state_sum,
    validate_triple_linking,
)

__all__ = [
    "TWIST_SPUN_TREFOIL",
    "TWIST_SPUN_TREFOIL_REVERSED",
    "Relation",
    "SurfaceBraidPresentation",
    "TripleLinkingData",
    "WhiteVertex",
    "admissible_pairs",
    "builtin_presets",
    "closed_form_terms",
    "colorings_of_presentation",
    "resolve_preset",
    "reversed_closed_form",
    "solve_ab",
    "surface_state_sum",
    "surface_tuple_action",
    "three_component_oracle",
    "triple_linking_state_sum",
    "twist_spun_trefoil_closed_form",
    "validate_triple_linking",
]
