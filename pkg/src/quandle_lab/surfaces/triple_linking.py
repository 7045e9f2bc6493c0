"""
Triple-Point Linking Numbers

T(i,j,k) counts, with sign, the triple points of a linked surface
K_1 ∪ … ∪ K_n whose top, middle and bottom sheets lie on K_i, K_j and K_k.
Over trivial quandles the 3-cocycle state sum depends on these numbers
alone, which gives closed forms for linked surfaces.
"""

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, Mapping, Optional, Tuple

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.cochains import Cochain, require_cocycle
from quandle_lab.quandle.constructors import trivial_quandle

TripleType = Tuple[int, int, int]


@dataclass(frozen=True)
class TripleLinkingData:
    """
    Triple-point linking numbers of an n-component linked surface

    Keys are 1-based component types (i, j, k) with i != j and j != k;
    absent types count as zero.
    """

    n: int
    values: Dict[TripleType, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"A linked surface has at least one component, got {self.n}")
        for key in self.values:
            if len(key) != 3 or not all(1 <= c <= self.n for c in key):
                raise ValueError(f"Triple type {key} is not over components 1..{self.n}")
            if key[0] == key[1] or key[1] == key[2]:
                raise ValueError(f"Triple type {key} has equal adjacent sheets")

    def __call__(self, i: int, j: int, k: int) -> int:
        return self.values.get((i, j, k), 0)

    @classmethod
    def from_ab(cls, a: int, b: int) -> "TripleLinkingData":
        """The three-component solution with T(1,2,3) = a and T(3,1,2) = b"""
        return cls(
            3,
            {
                (1, 2, 3): a,
                (3, 2, 1): -a,
                (3, 1, 2): b,
                (2, 1, 3): -b,
                (2, 3, 1): -(a + b),
                (1, 3, 2): a + b,
            },
        )

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "TripleLinkingData":
        """Read {"n": 3, "values": {"1,2,3": 1, ...}}"""
        raw = data.get("values") or {}
        values: Dict[TripleType, int] = {}
        for key, value in raw.items():  # type: ignore[attr-defined]
            i, j, k = (int(part) for part in str(key).split(","))
            values[(i, j, k)] = int(value)
        return cls(int(data["n"]), values)  # type: ignore[arg-type, call-overload]

    def to_json(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "values": {",".join(map(str, k)): v for k, v in sorted(self.values.items()) if v},
        }


def validate_triple_linking(data: TripleLinkingData) -> bool:
    """
    Check T(i,j,i) = 0 and T(i,j,k) - T(i,k,j) + T(k,i,j) = 0 for distinct indices
    """
    components = range(1, data.n + 1)
    for i, j in permutations(components, 2):
        if data(i, j, i) != 0:
            return False
    for i, j, k in permutations(components, 3):
        if data(i, j, k) - data(i, k, j) + data(k, i, j) != 0:
            return False
    return True


def solve_ab(data: TripleLinkingData) -> Optional[Tuple[int, int]]:
    """(a, b) for a consistent three-component surface, otherwise None"""
    if data.n != 3 or not validate_triple_linking(data):
        return None
    a, b = data(1, 2, 3), data(3, 1, 2)
    expected = TripleLinkingData.from_ab(a, b)
    if any(data(*key) != value for key, value in expected.values.items()):
        return None
    return a, b


def three_component_oracle(a: int, b: int) -> GroupRingElement:
    """21 + t^a + t^-a + t^b + t^-b + t^(a+b) + t^-(a+b) for T_3 with a distinct-triple χ"""
    exponents = [a, -a, b, -b, a + b, -(a + b)]
    return GroupRingElement(None, tuple([(0, 21)] + [(e, 1) for e in exponents]))


def triple_linking_state_sum(
    data: TripleLinkingData, k: int, cocycle: Cochain
) -> GroupRingElement:
    """
    State sum of a linked surface over the trivial quandle T_k

    Each component is monochromatic. A triple point of type (i, j, l) under
    a color assignment c contributes θ(c(l), c(j), c(i)).

    Raises:
        CocycleError: If the cochain is not a 3-cochain on T_k
    """
    require_cocycle(cocycle, trivial_quandle(k), 3)
    terms = []
    for colors in product(range(k), repeat=data.n):
        exponent = sum(
            value * cocycle.value((colors[l - 1], colors[j - 1], colors[i - 1]))
            for (i, j, l), value in data.values.items()
        )
        terms.append((exponent, 1))
    return GroupRingElement(cocycle.coefficients.modulus, tuple(terms))
