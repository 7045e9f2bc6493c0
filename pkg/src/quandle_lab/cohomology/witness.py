"""
Coboundary Witnesses

Solve δg = f for a cochain g one degree lower, and compare cohomology
classes through such solutions.
"""

from typing import Optional

from quandle_lab.algebra.matrix import solve_left
from quandle_lab.cohomology.chains import boundary_matrix, chain_basis
from quandle_lab.cohomology.cochains import Cochain, check_elements, theory_of
from quandle_lab.exceptions import CoefficientMismatchError
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)


def coboundary_witness(cochain: Cochain, quandle: Quandle) -> Optional[Cochain]:
    """
    Find g with δg = f over the cochain's coefficient group

    Args:
        cochain: The k-cochain f, k >= 1
        quandle: The quandle X

    Returns:
        A (k-1)-cochain g, or None when f is not a coboundary
    """
    if cochain.degree < 1:
        raise ValueError("Degree-0 cochains are never coboundaries")
    check_elements(cochain, quandle)
    theory = theory_of(cochain)
    target = chain_basis(quandle, cochain.degree, theory)
    source = chain_basis(quandle, cochain.degree - 1, theory)
    matrix = boundary_matrix(quandle, cochain.degree, theory)

    solution = solve_left(matrix, cochain.to_vector(target), cochain.coefficients.modulus)
    if solution is None:
        logger.debug(f"No witness: cochain of degree {cochain.degree} is not a coboundary")
        return None
    return Cochain.from_vector(source, solution, cochain.coefficients, cochain.quandle_flag)


def are_cohomologous(first: Cochain, second: Cochain, quandle: Quandle) -> bool:
    """
    True when first - second is a coboundary

    Raises:
        CoefficientMismatchError: If the cochains use different coefficient groups
    """
    if first.coefficients != second.coefficients:
        raise CoefficientMismatchError(
            f"Cannot compare classes over {first.coefficients} and {second.coefficients}"
        )
    return coboundary_witness(first - second, quandle) is not None
