"""
Quandle Homomorphisms

Backtracking search for homomorphisms between finite quandles. Images are
chosen for a generating set only; everything else is forced by
f(a∗b) = f(a)∗f(b) and f(a∗̄b) = f(a)∗̄f(b).
"""

from typing import Dict, List, Optional, Set

from quandle_lab.quandle.core import Quandle, QuandleHom
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)


def _closure(quandle: Quandle, seed: Set[int]) -> Set[int]:
    closed = set(seed)
    frontier = list(seed)
    while frontier:
        a = frontier.pop()
        for b in list(closed):
            for c in (
                quandle.op[a][b],
                quandle.op[b][a],
                quandle.inv_op[a][b],
                quandle.inv_op[b][a],
            ):
                if c not in closed:
                    closed.add(c)
                    frontier.append(c)
    return closed


def generating_set(quandle: Quandle) -> List[int]:
    """Greedy generators: each new one is the smallest element outside the current closure"""
    generators: List[int] = []
    covered: Set[int] = set()
    for a in quandle.elements:
        if a not in covered:
            generators.append(a)
            covered = _closure(quandle, covered | {a})
    return generators


def _extend(source: Quandle, target: Quandle, partial: Dict[int, int]) -> Optional[Dict[int, int]]:
    """Close a partial map under ∗ and ∗̄, or None on a conflict"""
    images = dict(partial)
    frontier = list(images)
    while frontier:
        a = frontier.pop()
        for b in list(images):
            fa, fb = images[a], images[b]
            forced = (
                (source.op[a][b], target.op[fa][fb]),
                (source.op[b][a], target.op[fb][fa]),
                (source.inv_op[a][b], target.inv_op[fa][fb]),
                (source.inv_op[b][a], target.inv_op[fb][fa]),
            )
            for c, fc in forced:
                known = images.get(c)
                if known is None:
                    images[c] = fc
                    frontier.append(c)
                elif known != fc:
                    return None
    return images


def _search(
    source: Quandle, target: Quandle, injective: bool, first_only: bool
) -> List[QuandleHom]:
    generators = generating_set(source)
    found: List[QuandleHom] = []

    def backtrack(index: int, images: Dict[int, int]) -> bool:
        if index == len(generators):
            mapping = tuple(images[a] for a in source.elements)
            if injective and len(set(mapping)) != source.n:
                return False
            found.append(QuandleHom(source, target, mapping))
            return first_only

        generator = generators[index]
        for image in target.elements:
            if injective and image in images.values():
                continue
            extended = _extend(source, target, {**images, generator: image})
            if extended is None:
                continue
            if injective and len(set(extended.values())) != len(extended):
                continue
            if backtrack(index + 1, extended):
                return True
        return False

    backtrack(0, {})
    return found


def find_homs(source: Quandle, target: Quandle) -> List[QuandleHom]:
    """
    All quandle homomorphisms source → target

    Args:
        source: Domain quandle
        target: Codomain quandle

    Returns:
        Homomorphisms sorted by their image tuples
    """
    homs = _search(source, target, injective=False, first_only=False)
    homs.sort(key=lambda h: h.mapping)
    logger.debug(f"Found {len(homs)} homomorphisms {source.name} -> {target.name}")
    return homs


def is_isomorphic(source: Quandle, target: Quandle) -> Optional[QuandleHom]:
    """A bijective homomorphism source → target, or None when the quandles differ"""
    if source.n != target.n:
        return None
    if sorted(_fixed_counts(source)) != sorted(_fixed_counts(target)):
        return None
    found = _search(source, target, injective=True, first_only=True)
    return found[0] if found else None


def _fixed_counts(quandle: Quandle) -> List[int]:
    # number of a with a∗b = a, per b; preserved by isomorphisms
    return [sum(1 for a in quandle.elements if quandle.op[a][b] == a) for b in quandle.elements]
