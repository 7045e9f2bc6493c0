"""
Cochains

A-valued functions on k-tuples of a quandle, their coboundaries and the
cocycle test. Values are stored sparsely; tuples that are absent are 0.
"""

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.algebra.matrix import IntegerMatrix
from quandle_lab.cohomology.chains import (
    ChainBasis,
    ChainTuple,
    Theory,
    boundary_matrix,
    chain_basis,
    is_degenerate,
)
from quandle_lab.exceptions import CocycleError, CoefficientMismatchError
from quandle_lab.quandle.core import Quandle

_KEY = re.compile(r"^\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)$")


def format_tuple(x: ChainTuple) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


def parse_tuple(key: str) -> ChainTuple:
    """Read a "(x1,...,xk)" key"""
    match = _KEY.match(key.strip())
    if not match:
        raise ValueError(f"Malformed tuple key '{key}'")
    body = match.group(1)
    return tuple(int(part) for part in body.split(",")) if body else ()


def _canonical(
    values: Union[Mapping[ChainTuple, int], Iterable[Tuple[ChainTuple, int]]],
    coefficients: AbelianCyclicCoefficients,
) -> Tuple[Tuple[ChainTuple, int], ...]:
    pairs = values.items() if isinstance(values, Mapping) else values
    merged: Dict[ChainTuple, int] = {}
    for x, value in pairs:
        key = tuple(int(a) for a in x)
        merged[key] = merged.get(key, 0) + int(value)
    reduced = ((x, coefficients.reduce(v)) for x, v in merged.items())
    return tuple(sorted((x, v) for x, v in reduced if v != 0))


@dataclass(frozen=True)
class Cochain:
    """
    Degree-k cochain with values in A = Z or Z_m

    quandle_flag marks cochains of the quandle complex: such a cochain must
    vanish on tuples with two equal adjacent entries.
    """

    degree: int
    coefficients: AbelianCyclicCoefficients = field(default_factory=AbelianCyclicCoefficients)
    values: Tuple[Tuple[ChainTuple, int], ...] = field(default=())
    quandle_flag: bool = True

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("Cochain degree must be non-negative")
        canonical = _canonical(self.values, self.coefficients)
        for x, _ in canonical:
            if len(x) != self.degree:
                raise ValueError(f"Tuple {format_tuple(x)} does not have length {self.degree}")
            if self.quandle_flag and is_degenerate(x):
                raise CocycleError(
                    f"Quandle cochain has a nonzero value on degenerate tuple {format_tuple(x)}"
                )
        object.__setattr__(self, "values", canonical)

    @classmethod
    def zero(
        cls,
        degree: int,
        coefficients: Optional[AbelianCyclicCoefficients] = None,
        quandle_flag: bool = True,
    ) -> "Cochain":
        return cls(degree, coefficients or AbelianCyclicCoefficients(), (), quandle_flag)

    @classmethod
    def characteristic(
        cls,
        x: Sequence[int],
        coefficients: Optional[AbelianCyclicCoefficients] = None,
        multiplicity: int = 1,
        quandle_flag: bool = True,
    ) -> "Cochain":
        """χ_x: multiplicity on the tuple x, 0 elsewhere"""
        key = tuple(x)
        coefficients = coefficients or AbelianCyclicCoefficients()
        return cls(len(key), coefficients, ((key, multiplicity),), quandle_flag)

    @classmethod
    def from_mapping(
        cls,
        degree: int,
        values: Mapping[ChainTuple, int],
        coefficients: Optional[AbelianCyclicCoefficients] = None,
        quandle_flag: bool = True,
    ) -> "Cochain":
        coefficients = coefficients or AbelianCyclicCoefficients()
        return cls(degree, coefficients, tuple(values.items()), quandle_flag)

    @classmethod
    def from_vector(
        cls,
        basis: ChainBasis,
        vector: Sequence[int],
        coefficients: AbelianCyclicCoefficients,
        quandle_flag: bool = True,
    ) -> "Cochain":
        if len(vector) != len(basis):
            raise ValueError(f"Vector of length {len(vector)} does not fit a basis of {len(basis)}")
        pairs = tuple((x, int(v)) for x, v in zip(basis.tuples, vector) if v)
        return cls(basis.degree, coefficients, pairs, quandle_flag)

    def as_dict(self) -> Dict[ChainTuple, int]:
        return dict(self.values)

    def value(self, x: Sequence[int]) -> int:
        return self.as_dict().get(tuple(x), 0)

    __call__ = value

    @property
    def support(self) -> List[ChainTuple]:
        return [x for x, _ in self.values]

    def is_zero(self) -> bool:
        return not self.values

    def to_vector(self, basis: ChainBasis) -> List[int]:
        """
        Coordinates in a chain basis

        Raises:
            ValueError: If the cochain is nonzero on a tuple outside the basis
        """
        vector = [0] * len(basis)
        for x, v in self.values:
            position = basis.index.get(x)
            if position is None:
                raise ValueError(
                    f"Tuple {format_tuple(x)} is not in the {basis.theory.value} basis"
                )
            vector[position] = v
        return vector

    def with_coefficients(self, coefficients: AbelianCyclicCoefficients) -> "Cochain":
        """Same integer values read in another coefficient group (reducing if finite)"""
        return Cochain(self.degree, coefficients, self.values, self.quandle_flag)

    def _check(self, other: "Cochain") -> None:
        if self.coefficients != other.coefficients:
            raise CoefficientMismatchError(
                f"Cochains over {self.coefficients} and {other.coefficients} cannot be combined"
            )
        if self.degree != other.degree:
            raise ValueError(f"Cochain degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(
            self.degree,
            self.coefficients,
            self.values + other.values,
            self.quandle_flag and other.quandle_flag,
        )

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, factor: int) -> "Cochain":
        return Cochain(
            self.degree,
            self.coefficients,
            tuple((x, v * factor) for x, v in self.values),
            self.quandle_flag,
        )

    def to_json(self) -> Dict[str, object]:
        document: Dict[str, object] = {
            "degree": self.degree,
            "coeff": self.coefficients.label,
            "values": {format_tuple(x): v for x, v in self.values},
        }
        if not self.quandle_flag:
            document["quandle_flag"] = False
        return document

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "Cochain":
        coefficients = AbelianCyclicCoefficients.parse(str(data.get("coeff", "Z")))
        raw = data.get("values") or {}
        if not isinstance(raw, Mapping):
            raise ValueError("Cochain 'values' must be an object of tuple keys")
        pairs = tuple((parse_tuple(str(k)), int(v)) for k, v in raw.items())
        degree = int(data["degree"])  # type: ignore[call-overload]
        return cls(degree, coefficients, pairs, bool(data.get("quandle_flag", True)))

    def __str__(self) -> str:
        if not self.values:
            return "0"
        text = ""
        for x, v in self.values:
            magnitude = "" if abs(v) == 1 else str(abs(v))
            term = f"{magnitude}χ{format_tuple(x)}"
            if not text:
                text = ("-" if v < 0 else "") + term
            else:
                text += f" {'-' if v < 0 else '+'} {term}"
        return text


def theory_of(cochain: Cochain) -> Theory:
    return Theory.Q if cochain.quandle_flag else Theory.R


def check_elements(cochain: Cochain, quandle: Quandle) -> None:
    for x in cochain.support:
        if any(not 0 <= a < quandle.n for a in x):
            raise ValueError(
                f"Tuple {format_tuple(x)} has entries outside {quandle.name or 'the quandle'}"
            )


def coboundary(cochain: Cochain, quandle: Quandle) -> Cochain:
    """
    δf as a cochain of degree k+1

    (δf)(x) = f(∂x), computed as the row vector f times the boundary matrix
    of degree k+1.
    """
    check_elements(cochain, quandle)
    theory = theory_of(cochain)
    source = chain_basis(quandle, cochain.degree, theory)
    target = chain_basis(quandle, cochain.degree + 1, theory)
    matrix = boundary_matrix(quandle, cochain.degree + 1, theory)
    if len(source) == 0:
        return Cochain(cochain.degree + 1, cochain.coefficients, (), cochain.quandle_flag)
    row = IntegerMatrix([cochain.to_vector(source)]) @ matrix
    return Cochain.from_vector(target, row.row(0), cochain.coefficients, cochain.quandle_flag)


def is_cocycle(cochain: Cochain, quandle: Quandle) -> bool:
    """
    True when δf = 0 over the cochain's coefficient group

    Degenerate values are already excluded for quandle cochains. In degree
    2 this is φ(p,r) + φ(p∗r,q∗r) = φ(p,q) + φ(p∗q,r) for all triples.
    """
    return coboundary(cochain, quandle).is_zero()


def require_cocycle(cochain: Cochain, quandle: Quandle, degree: int) -> None:
    """
    Raises:
        CocycleError: If the cochain has the wrong degree or is not a cocycle
    """
    if cochain.degree != degree:
        raise CocycleError(f"Expected a {degree}-cocycle, got degree {cochain.degree}")
    if not is_cocycle(cochain, quandle):
        raise CocycleError(f"Cochain is not a cocycle on {quandle.name or 'the quandle'}")


def all_tuples(quandle: Quandle, degree: int) -> Iterable[ChainTuple]:
    return product(quandle.elements, repeat=degree)
