"""
Group Rings

Elements of Z[A] for a cyclic group A = <t>, either infinite (Laurent
exponents) or Z_m (exponents reduced mod m). State sums take values here.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from quandle_lab.exceptions import CoefficientMismatchError

_COEFF_PATTERN = re.compile(r"^Z(?:_?(\d+))?$")


@dataclass(frozen=True)
class AbelianCyclicCoefficients:
    """Coefficient group A: Z when modulus is None, otherwise Z_m"""

    modulus: Optional[int] = None
    symbol: str = "t"

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"Coefficient modulus must be >= 2, got {self.modulus}")

    @classmethod
    def parse(cls, label: str) -> "AbelianCyclicCoefficients":
        """
        Parse a label such as "Z", "Z3" or "Z_4"

        Raises:
            ValueError: If the label is not of that shape
        """
        match = _COEFF_PATTERN.match(label.strip())
        if not match:
            raise ValueError(f"Unknown coefficient group '{label}' (expected Z or Zm)")
        return cls(int(match.group(1)) if match.group(1) else None)

    @property
    def label(self) -> str:
        return "Z" if self.modulus is None else f"Z{self.modulus}"

    @property
    def is_integral(self) -> bool:
        return self.modulus is None

    def reduce(self, value: int) -> int:
        return value if self.modulus is None else value % self.modulus

    def __str__(self) -> str:
        return self.label


Coefficients = AbelianCyclicCoefficients


def _canonical_terms(
    terms: Union[Mapping[int, int], Iterable[Tuple[int, int]]], modulus: Optional[int]
) -> Tuple[Tuple[int, int], ...]:
    pairs = terms.items() if isinstance(terms, Mapping) else terms
    merged: Dict[int, int] = {}
    for exponent, multiplicity in pairs:
        exponent = int(exponent) % modulus if modulus is not None else int(exponent)
        merged[exponent] = merged.get(exponent, 0) + int(multiplicity)
    return tuple(sorted((e, c) for e, c in merged.items() if c != 0))


@dataclass(frozen=True)
class GroupRingElement:
    """
    Finite sum of multiplicity * t^exponent

    Stored canonically: no zero multiplicities, exponents sorted and, for a
    finite cyclic A, reduced into [0, m).
    """

    exponent_modulus: Optional[int] = None
    terms: Tuple[Tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.exponent_modulus is not None and self.exponent_modulus < 1:
            raise ValueError("exponent modulus must be positive")
        object.__setattr__(self, "terms", _canonical_terms(self.terms, self.exponent_modulus))

    @classmethod
    def zero(cls, exponent_modulus: Optional[int] = None) -> "GroupRingElement":
        return cls(exponent_modulus)

    @classmethod
    def constant(cls, value: int, exponent_modulus: Optional[int] = None) -> "GroupRingElement":
        return cls(exponent_modulus, ((0, value),))

    @classmethod
    def monomial(
        cls, exponent: int, exponent_modulus: Optional[int] = None, multiplicity: int = 1
    ) -> "GroupRingElement":
        return cls(exponent_modulus, ((exponent, multiplicity),))

    @classmethod
    def from_mapping(
        cls, terms: Mapping[int, int], exponent_modulus: Optional[int] = None
    ) -> "GroupRingElement":
        return cls(exponent_modulus, tuple(terms.items()))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        if self.exponent_modulus is not None:
            exponent %= self.exponent_modulus
        return self.as_dict().get(exponent, 0)

    def _check(self, other: "GroupRingElement") -> None:
        if self.exponent_modulus != other.exponent_modulus:
            raise CoefficientMismatchError(
                f"Cannot combine elements over exponent groups "
                f"{self.exponent_modulus or 'Z'} and {other.exponent_modulus or 'Z'}"
            )

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(self.exponent_modulus, self.terms + other.terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.exponent_modulus, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: Union["GroupRingElement", int]) -> "GroupRingElement":
        if isinstance(other, int):
            scaled = tuple((e, c * other) for e, c in self.terms)
            return GroupRingElement(self.exponent_modulus, scaled)
        self._check(other)
        products = tuple(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )
        return GroupRingElement(self.exponent_modulus, products)

    __rmul__ = __mul__

    def is_trivial(self) -> bool:
        """True when all mass sits on t^0, i.e. the element is an integer"""
        return all(e == 0 for e, _ in self.terms)

    def total(self) -> int:
        """Augmentation: the sum of multiplicities"""
        return sum(c for _, c in self.terms)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def to_json(self) -> Dict[str, object]:
        label = "Z" if self.exponent_modulus is None else f"Z{self.exponent_modulus}"
        return {"coeff": label, "terms": {str(e): c for e, c in self.terms}}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "GroupRingElement":
        modulus = AbelianCyclicCoefficients.parse(str(data["coeff"])).modulus
        terms = dict(data.get("terms") or {})  # type: ignore[call-overload]
        return cls(modulus, tuple((int(e), int(c)) for e, c in terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda term: (term[0] != 0, abs(term[0]), term[0] < 0))
        parts = []
        for exponent, multiplicity in ordered:
            if exponent == 0:
                body = str(abs(multiplicity))
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if abs(multiplicity) == 1 else f"{abs(multiplicity)}{power}"
            sign = "-" if multiplicity < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def group_ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def group_ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def group_ring_is_trivial(a: GroupRingElement) -> bool:
    return a.is_trivial()
