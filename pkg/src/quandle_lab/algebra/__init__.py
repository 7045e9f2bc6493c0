"""algebra module"""

from quandle_lab.algebra.group_ring import (
    AbelianCyclicCoefficients,
    Coefficients,
    GroupRingElement,
    group_ring_add,
    group_ring_is_trivial,
    group_ring_mul,
)
from quandle_lab.algebra.groups import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    group_from_table,
    symmetric_group,
    verify_group,
)
from quandle_lab.algebra.matrix import (
    IntegerMatrix,
    SmithForm,
    extended_gcd,
    howell_form,
    left_kernel,
    rank_mod_p,
    smith_normal_form,
    solve_left,
)

__all__ = [
    "AbelianCyclicCoefficients",
    "Coefficients",
    "FiniteGroup",
    "GroupRingElement",
    "IntegerMatrix",
    "SmithForm",
    "cyclic_group",
    "direct_product",
    "extended_gcd",
    "group_from_table",
    "group_ring_add",
    "group_ring_is_trivial",
    "group_ring_mul",
    "howell_form",
    "left_kernel",
    "rank_mod_p",
    "smith_normal_form",
    "solve_left",
    "symmetric_group",
    "verify_group",
]
