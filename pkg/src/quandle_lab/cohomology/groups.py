"""
Cohomology Groups

H^k(X; A) for the rack, degenerate and quandle complexes, over Z through
Smith normal forms and over Z_m through Howell forms, with explicit
representative cocycles. Integral homology and rational dimensions are
read off the same boundary matrices.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.algebra.matrix import (
    IntegerMatrix,
    howell_form,
    left_kernel,
    smith_normal_form,
)
from quandle_lab.cohomology.chains import ChainBasis, Theory, boundary_matrix, chain_basis
from quandle_lab.cohomology.cochains import Cochain
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)


class Variant(str, Enum):
    """
    STANDARD is Z/B; RESTRICTED is (P ∩ Z_R)/(P ∩ B_R), P being the cochains
    that vanish on degenerate tuples
    """

    STANDARD = "standard"
    RESTRICTED = "restricted"


def describe_summands(summands: Sequence[int]) -> str:
    """Render cyclic summand orders, 0 meaning Z, e.g. "Z2 ⊕ Z2 ⊕ Z4" or "0" """
    if not summands:
        return "0"
    parts = []
    for order in summands:
        if order == 0:
            parts.append("Z")
        else:
            parts.append(f"Z{order}")
    return " ⊕ ".join(parts)


@dataclass(frozen=True)
class CohomologyGroup:
    """
    Cyclic decomposition of H^k with representatives

    summands lists the orders of the cyclic factors in divisor-chain order,
    with 0 for an infinite cyclic factor; representatives[i] is a cocycle
    generating summand i. coboundaries generate B^k.
    """

    quandle_name: str
    degree: int
    theory: Theory
    coefficients: AbelianCyclicCoefficients
    summands: Tuple[int, ...]
    representatives: Tuple[Cochain, ...] = field(default=())
    coboundaries: Tuple[Cochain, ...] = field(default=())
    variant: Variant = Variant.STANDARD

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.summands if d == 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.summands if d != 0)

    def is_trivial(self) -> bool:
        return not self.summands

    def describe(self) -> str:
        return describe_summands(self.summands)

    def to_json(self) -> Dict[str, object]:
        return {
            "quandle": self.quandle_name,
            "degree": self.degree,
            "theory": self.theory.value,
            "coeff": self.coefficients.label,
            "variant": self.variant.value,
            "summands": list(self.summands),
            "group": self.describe(),
            "representatives": [c.to_json() for c in self.representatives],
        }


@dataclass(frozen=True)
class HomologyGroup:
    """Integral homology H_k: free rank plus torsion invariant factors"""

    quandle_name: str
    degree: int
    theory: Theory
    free_rank: int
    torsion: Tuple[int, ...]

    @property
    def summands(self) -> Tuple[int, ...]:
        return self.torsion + (0,) * self.free_rank

    def describe(self) -> str:
        return describe_summands(self.summands)

    def to_json(self) -> Dict[str, object]:
        return {
            "quandle": self.quandle_name,
            "degree": self.degree,
            "theory": self.theory.value,
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "group": self.describe(),
        }


def _cochains(
    rows: IntegerMatrix, basis: ChainBasis, coefficients: AbelianCyclicCoefficients, flag: bool
) -> Tuple[Cochain, ...]:
    found = []
    for i in range(rows.rows):
        cochain = Cochain.from_vector(basis, rows.row(i), coefficients, flag)
        if not cochain.is_zero():
            found.append(cochain)
    return tuple(found)


def _restricted_image(quandle: Quandle, degree: int, modulus: Optional[int]) -> IntegerMatrix:
    """Generators of P ∩ B_R in quandle-basis coordinates"""
    rack = boundary_matrix(quandle, degree, Theory.R)
    rack_basis = chain_basis(quandle, degree, Theory.R)
    quandle_basis = chain_basis(quandle, degree, Theory.Q)
    degenerate = [i for i, x in enumerate(rack_basis.tuples) if x not in quandle_basis]
    nondegenerate = [rack_basis.index[x] for x in quandle_basis.tuples]
    vanishing = left_kernel(rack.select(cols=degenerate), modulus)
    if vanishing.rows == 0:
        return IntegerMatrix.zeros(0, len(quandle_basis))
    return (vanishing @ rack).select(cols=nondegenerate)


def _integral(
    kernel: IntegerMatrix,
    u_inv: IntegerMatrix,
    rank: int,
    image: IntegerMatrix,
) -> Tuple[Tuple[int, ...], IntegerMatrix, IntegerMatrix]:
    """
    Quotient of the cocycle lattice by the image over Z

    The cocycle lattice has basis K = U[rank:] from the Smith form of the next
    boundary; the image rows are written in that basis as C with image = C·K
    and the Smith form of C splits the quotient.
    """
    size = kernel.rows
    relations = (image @ u_inv).select(cols=range(rank, rank + size))
    form = smith_normal_form(relations)
    factors = form.invariant_factors
    generators = form.v_inv @ kernel

    padded = [factors[i] if i < len(factors) else 0 for i in range(size)]
    chosen = [i for i, d in enumerate(padded) if d != 1]
    boundary_rows = [i for i, d in enumerate(padded) if d != 0]
    boundaries = IntegerMatrix(
        [[padded[i] * x for x in generators.row(i)] for i in boundary_rows],
        cols=kernel.cols,
    )
    return tuple(padded[i] for i in chosen), generators.select(rows=chosen), boundaries


def _modular(
    kernel: IntegerMatrix, image: IntegerMatrix, modulus: int
) -> Tuple[Tuple[int, ...], IntegerMatrix, IntegerMatrix]:
    """
    Quotient of the cocycle module by the image over Z_m

    Relations among the kernel generators are the right halves of the Howell
    rows of [K | I] stacked on [image | 0] whose left half vanishes.
    """
    size = kernel.rows
    width = kernel.cols
    if size == 0:
        return (), kernel, IntegerMatrix.zeros(0, width)

    stacked = kernel.hstack(IntegerMatrix.identity(size))
    if image.rows:
        stacked = stacked.vstack(image.hstack(IntegerMatrix.zeros(image.rows, size)))
    howell = howell_form(stacked, modulus)
    relation_rows = [
        list(howell.row(i)[width:]) for i in range(howell.rows) if not any(howell.row(i)[:width])
    ]
    relation_rows.extend([modulus if j == i else 0 for j in range(size)] for i in range(size))
    relations = IntegerMatrix(relation_rows, cols=size)

    form = smith_normal_form(relations)
    factors = form.invariant_factors
    generators = (form.v_inv @ kernel).reduce(modulus)
    summands = [d for d in factors if d != 1]
    chosen = [i for i, d in enumerate(factors) if d != 1]
    boundaries = howell_form(image, modulus) if image.rows else IntegerMatrix.zeros(0, width)
    return tuple(summands), generators.select(rows=chosen), boundaries


def cohomology(
    quandle: Quandle,
    degree: int,
    theory: Union[str, Theory] = Theory.Q,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
    variant: Union[str, Variant] = Variant.STANDARD,
) -> CohomologyGroup:
    """
    Compute H^k(X; A) = ker δ_k / im δ_(k-1)

    Args:
        quandle: Finite quandle X
        degree: k >= 1
        theory: R, D or Q
        coefficients: A = Z (default) or Z_m
        variant: "standard", or "restricted" for the quotient of quandle
            cocycles by rack coboundaries that vanish on degenerate tuples
            (quandle theory only)

    Returns:
        CohomologyGroup with summand orders and representative cocycles

    Raises:
        ValueError: If degree < 1 or the restricted variant is asked for
            another theory
    """
    if degree < 1:
        raise ValueError(f"Cohomology degree must be >= 1, got {degree}")
    theory = Theory.parse(theory)
    variant = Variant(variant)
    coefficients = coefficients or AbelianCyclicCoefficients()
    if variant is Variant.RESTRICTED and theory is not Theory.Q:
        raise ValueError("The restricted variant is defined for the quandle theory only")

    modulus = coefficients.modulus
    basis = chain_basis(quandle, degree, theory)
    following = boundary_matrix(quandle, degree + 1, theory)
    if variant is Variant.RESTRICTED:
        image = _restricted_image(quandle, degree, modulus)
    else:
        image = boundary_matrix(quandle, degree, theory)

    if modulus is None:
        form = smith_normal_form(following)
        kernel = form.u.select(rows=range(form.rank, following.rows))
        summands, representatives, boundaries = _integral(kernel, form.u_inv, form.rank, image)
    else:
        kernel = left_kernel(following, modulus)
        summands, representatives, boundaries = _modular(kernel, image, modulus)

    group = CohomologyGroup(
        quandle_name=quandle.name,
        degree=degree,
        theory=theory,
        coefficients=coefficients,
        summands=summands,
        representatives=_cochains(representatives, basis, coefficients, theory is Theory.Q),
        coboundaries=_cochains(boundaries, basis, coefficients, theory is Theory.Q),
        variant=variant,
    )
    logger.debug(
        f"H^{degree}_{theory.value}({quandle.name}; {coefficients}) = {group.describe()}"
    )
    return group


def cocycle_basis(
    quandle: Quandle,
    degree: int,
    theory: Union[str, Theory] = Theory.Q,
    coefficients: Optional[AbelianCyclicCoefficients] = None,
) -> List[Cochain]:
    """Generators of Z^k: a basis over Z, a generating set over Z_m"""
    theory = Theory.parse(theory)
    coefficients = coefficients or AbelianCyclicCoefficients()
    basis = chain_basis(quandle, degree, theory)
    kernel = left_kernel(boundary_matrix(quandle, degree + 1, theory), coefficients.modulus)
    return list(_cochains(kernel, basis, coefficients, theory is Theory.Q))


def _rank(matrix: IntegerMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return smith_normal_form(matrix).rank


def homology(
    quandle: Quandle, degree: int, theory: Union[str, Theory] = Theory.Q
) -> HomologyGroup:
    """
    Integral homology H_k = ker ∂_k / im ∂_(k+1)

    Free rank is |C_k| - rank ∂_k - rank ∂_(k+1); torsion is the invariant
    factors of ∂_(k+1) greater than 1.
    """
    if degree < 1:
        raise ValueError(f"Homology degree must be >= 1, got {degree}")
    theory = Theory.parse(theory)
    current = boundary_matrix(quandle, degree, theory)
    following = boundary_matrix(quandle, degree + 1, theory)
    size = current.cols
    torsion: Tuple[int, ...] = ()
    following_rank = 0
    if following.rows and following.cols:
        form = smith_normal_form(following)
        following_rank = form.rank
        torsion = tuple(d for d in form.invariant_factors if d > 1)
    free = size - _rank(current) - following_rank
    return HomologyGroup(quandle.name, degree, theory, free, torsion)


def rational_dimension(
    quandle: Quandle, degree: int, theory: Union[str, Theory] = Theory.Q
) -> int:
    """dim H^k(X; Q), the free rank of the integral cohomology"""
    if degree < 1:
        raise ValueError(f"Cohomology degree must be >= 1, got {degree}")
    theory = Theory.parse(theory)
    current = boundary_matrix(quandle, degree, theory)
    following = boundary_matrix(quandle, degree + 1, theory)
    return current.cols - _rank(current) - _rank(following)
