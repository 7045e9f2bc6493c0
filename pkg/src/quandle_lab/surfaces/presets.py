"""
Preset Surfaces

The 2-twist-spun trefoil and its orientation-reversed image as surface
braids of degree 4. Both present the quandle with generators x1, x2 and
relations x2 = x1∗(x2 x1), x2 = x2∗(x1 x1).
"""

from typing import Dict

from quandle_lab.surfaces.presentation import SurfaceBraidPresentation

TWIST_SPUN_TREFOIL = SurfaceBraidPresentation.build(
    4,
    relations=[
        ([], 2, -1),
        ([-2, -2, 1], 1, 1),
        ([-2, -2, 1], 3, -1),
        ([-2, 1, 3], 3, 1),
        ([-2, 1, 3], 1, -1),
        ([-1, 3], 2, 1),
    ],
    white_vertices=[
        ([1], 1, 1),
        ([-2, 1], 1, 1),
        ([-2, 1], 2, 1),
        ([1, 3], 2, -1),
        ([1, 3], 1, -1),
        ([3], 1, -1),
    ],
    name="TWIST_SPUN_TREFOIL",
)

# base indices recovered by matching each triple point to (i, i+1, i+2)
TWIST_SPUN_TREFOIL_REVERSED = SurfaceBraidPresentation.build(
    4,
    relations=[
        ([1, -3], 2, 1),
        ([2, -1, -3], 1, -1),
        ([2, -1, -3], 3, 1),
        ([2, 2, -1], 3, -1),
        ([2, 2, -1], 1, 1),
        ([], 2, -1),
    ],
    white_vertices=[
        ([1, 1, -3], 1, -1),
        ([2, 2, -1, -3], 1, -1),
        ([2, 2, -1, -3], 2, -1),
        ([2, 2, 2, -1], 2, 1),
        ([2, 2, 2, -1], 1, 1),
        ([1], 1, 1),
    ],
    name="TWIST_SPUN_TREFOIL_REVERSED",
)


def builtin_presets() -> Dict[str, SurfaceBraidPresentation]:
    return {
        TWIST_SPUN_TREFOIL.name: TWIST_SPUN_TREFOIL,
        TWIST_SPUN_TREFOIL_REVERSED.name: TWIST_SPUN_TREFOIL_REVERSED,
    }


def resolve_preset(name: str) -> SurfaceBraidPresentation:
    """
    Raises:
        ValueError: For unknown preset names
    """
    presets = builtin_presets()
    key = name.strip().upper()
    if key not in presets:
        raise ValueError(f"Unknown surface preset '{name}'. Available: {', '.join(presets)}")
    return presets[key]
