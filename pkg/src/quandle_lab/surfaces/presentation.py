"""
Surface-Braid Presentations

A knotted surface given as a surface braid: a braid system (w_i, k_i, ε_i)
whose relations Q(w_i)(x_{k_i}) = Q(w_i)(x_{k_i+1}) present its
fundamental quandle, plus the white vertices (β, i, ε) of its chart, each
a triple point read off at positions i, i+1, i+2 after acting by β.

Colorings and the 3-cocycle state sum are evaluated entirely inside the
finite quandle by acting on color tuples.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.cochains import Cochain, require_cocycle
from quandle_lab.exceptions import CocycleError, PresentationError
from quandle_lab.knots.braids import BraidWord
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.logger import get_logger
from quandle_lab.utils.parallel import partitioned_sum

logger = get_logger(__name__)


def _check_sign(value: int, where: str) -> int:
    if value not in (1, -1):
        raise PresentationError(f"{where}: sign must be +1 or -1, got {value}")
    return value


@dataclass(frozen=True)
class Relation:
    """Braid-system entry w⁻¹ σ_k^ε w"""

    word: BraidWord
    k: int
    eps: int

    def to_json(self) -> Dict[str, object]:
        return {"w": list(self.word.letters), "k": self.k, "eps": self.eps}


@dataclass(frozen=True)
class WhiteVertex:
    """Triple point: act by beta, then read positions (i, i+1, i+2) with sign eps"""

    beta: BraidWord
    i: int
    eps: int

    def to_json(self) -> Dict[str, object]:
        return {"beta": list(self.beta.letters), "i": self.i, "eps": self.eps}


@dataclass(frozen=True)
class SurfaceBraidPresentation:
    """Surface braid of degree m with its braid system and white vertices"""

    degree: int
    relations: Tuple[Relation, ...] = field(default=())
    white_vertices: Tuple[WhiteVertex, ...] = field(default=())
    name: str = ""

    def __post_init__(self) -> None:
        m = self.degree
        if m < 1:
            raise PresentationError(f"Surface braid degree must be positive, got {m}")
        for n, relation in enumerate(self.relations, start=1):
            if relation.word.strands != m:
                raise PresentationError(
                    f"Relation {n}: word is on {relation.word.strands} strands"
                )
            if not 1 <= relation.k <= m - 1:
                raise PresentationError(f"Relation {n}: k={relation.k} outside 1..{m - 1}")
            _check_sign(relation.eps, f"Relation {n}")
        for n, vertex in enumerate(self.white_vertices, start=1):
            if vertex.beta.strands != m:
                raise PresentationError(
                    f"White vertex {n}: beta is on {vertex.beta.strands} strands"
                )
            if not 1 <= vertex.i <= m - 2:
                raise PresentationError(f"White vertex {n}: i={vertex.i} outside 1..{m - 2}")
            _check_sign(vertex.eps, f"White vertex {n}")

    @classmethod
    def build(
        cls,
        degree: int,
        relations: Sequence[Tuple[Sequence[int], int, int]],
        white_vertices: Sequence[Tuple[Sequence[int], int, int]] = (),
        name: str = "",
    ) -> "SurfaceBraidPresentation":
        """Construct from plain (letters, index, sign) triples"""
        return cls(
            degree,
            tuple(Relation(BraidWord(degree, tuple(w)), k, eps) for w, k, eps in relations),
            tuple(WhiteVertex(BraidWord(degree, tuple(b)), i, eps) for b, i, eps in white_vertices),
            name,
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "relations": [r.to_json() for r in self.relations],
            "white_vertices": [v.to_json() for v in self.white_vertices],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object], name: str = "") -> "SurfaceBraidPresentation":
        """
        Raises:
            PresentationError: On missing keys or out-of-range data
        """
        try:
            degree = int(data["degree"])  # type: ignore[call-overload]
            relations = [
                (entry["w"], int(entry["k"]), int(entry["eps"]))
                for entry in data.get("relations") or []  # type: ignore[attr-defined]
            ]
            vertices = [
                (entry["beta"], int(entry["i"]), int(entry["eps"]))
                for entry in data.get("white_vertices") or []  # type: ignore[attr-defined]
            ]
        except (KeyError, TypeError, ValueError) as e:
            raise PresentationError(f"Malformed presentation document: {e}") from e
        return cls.build(degree, relations, vertices, name)


def surface_tuple_action(
    braid: BraidWord, quandle: Quandle, colors: Sequence[int]
) -> Tuple[int, ...]:
    """
    Evaluate the free-quandle automorphism of a braid on a color tuple

    σ_i sends (.., c_i, c_(i+1), ..) to (.., c_(i+1) ∗̄ c_i, c_i, ..) and σ_i⁻¹
    to (.., c_(i+1), c_i ∗ c_(i+1), ..). A word acts letter by letter from
    its last letter to its first.
    """
    if len(colors) != braid.strands:
        raise PresentationError(f"Expected {braid.strands} colors, got {len(colors)}")
    c = list(colors)
    for letter in reversed(braid.letters):
        i = abs(letter) - 1
        left, right = c[i], c[i + 1]
        if letter > 0:
            c[i], c[i + 1] = quandle.inv_op[right][left], left
        else:
            c[i], c[i + 1] = right, quandle.op[left][right]
    return tuple(c)


def _satisfies(
    presentation: SurfaceBraidPresentation, quandle: Quandle, colors: Tuple[int, ...]
) -> bool:
    for relation in presentation.relations:
        acted = surface_tuple_action(relation.word, quandle, colors)
        if acted[relation.k - 1] != acted[relation.k]:
            return False
    return True


def colorings_of_presentation(
    presentation: SurfaceBraidPresentation, quandle: Quandle
) -> List[Tuple[int, ...]]:
    """All color tuples satisfying every braid-system relation, in lexicographic order"""
    found = [
        colors
        for colors in product(quandle.elements, repeat=presentation.degree)
        if _satisfies(presentation, quandle, colors)
    ]
    logger.debug(f"{len(found)} colorings of {presentation.name or 'surface'} by {quandle.name}")
    return found


def _exponent(
    presentation: SurfaceBraidPresentation,
    quandle: Quandle,
    colors: Tuple[int, ...],
    values: Mapping[Tuple[int, ...], int],
) -> int:
    exponent = 0
    for vertex in presentation.white_vertices:
        acted = surface_tuple_action(vertex.beta, quandle, colors)
        triple = acted[vertex.i - 1 : vertex.i + 2]
        exponent += vertex.eps * values.get(triple, 0)
    return exponent


def surface_state_sum(
    presentation: SurfaceBraidPresentation,
    quandle: Quandle,
    cocycle: Cochain,
    workers: Optional[int] = None,
) -> GroupRingElement:
    """
    3-cocycle state sum Σ_c Π_W θ(c(p), c(q), c(r))^ε(W)

    Args:
        presentation: Surface braid with white vertices
        quandle: Coloring quandle X
        cocycle: Quandle 3-cocycle θ; its coefficient group is A
        workers: Thread cap for the enumeration

    Raises:
        CocycleError: If θ is not a quandle 3-cocycle on X
    """
    if not cocycle.quandle_flag:
        raise CocycleError("Triple-point weights must come from a quandle cocycle")
    require_cocycle(cocycle, quandle, 3)
    modulus = cocycle.coefficients.modulus
    values = cocycle.as_dict()
    rest = presentation.degree - 1

    def work(first: int) -> GroupRingElement:
        terms = []
        for tail in product(quandle.elements, repeat=rest):
            colors = (first,) + tail
            if _satisfies(presentation, quandle, colors):
                terms.append((_exponent(presentation, quandle, colors, values), 1))
        return GroupRingElement(modulus, tuple(terms))

    total = partitioned_sum(
        work,
        list(quandle.elements),
        lambda x, y: x + y,
        GroupRingElement.zero(modulus),
        workers,
    )
    label = presentation.name or "surface"
    logger.debug(f"Surface state sum of {label} over {quandle.name}: {total}")
    return total
