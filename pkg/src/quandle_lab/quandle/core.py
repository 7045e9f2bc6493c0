"""
Quandle Core

Finite quandles (and racks) as operation tables over 0..n-1, axiom
verification with witnesses, and quandle homomorphisms.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Sequence, Tuple

from quandle_lab.exceptions import QuandleAxiomError
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Quandle:
    """
    Operation table with its right inverse

    op[a][b] is a∗b and inv_op[a][b] is a∗̄b, the unique c with c∗b = a.
    Elements are always the indices 0..n-1; labels are for display only.
    """

    op: Table
    inv_op: Table
    name: str = ""
    labels: Tuple[str, ...] = field(default=())
    is_rack: bool = False

    @property
    def n(self) -> int:
        return len(self.op)

    @property
    def elements(self) -> range:
        return range(self.n)

    def star(self, a: int, b: int) -> int:
        return self.op[a][b]

    def bar(self, a: int, b: int) -> int:
        return self.inv_op[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def index_of(self, label: str) -> int:
        """Element index for a display label (or a plain index string)"""
        if label in self.labels:
            return self.labels.index(label)
        value = int(label)
        if not 0 <= value < self.n:
            raise ValueError(f"{label} is not an element of {self.name or 'the quandle'}")
        return value

    def is_involutory(self) -> bool:
        return all(self.op[self.op[a][b]][b] == a for a in self.elements for b in self.elements)

    def to_document(self) -> Dict[str, object]:
        return {"n": self.n, "op": [list(row) for row in self.op]}


def _right_inverse(op: Table) -> Table:
    n = len(op)
    inverse: List[List[int]] = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            inverse[op[c][b]][b] = c
    return tuple(tuple(row) for row in inverse)


def _check_shape(op_table: Sequence[Sequence[int]]) -> Table:
    n = len(op_table)
    if n == 0:
        raise ValueError("Operation table is empty")
    rows = tuple(tuple(int(x) for x in row) for row in op_table)
    for a, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"Operation table row {a} has {len(row)} entries, expected {n}")
        for b, value in enumerate(row):
            if not 0 <= value < n:
                raise ValueError(f"Entry {a}*{b} = {value} is out of range 0..{n - 1}")
    return rows


def _axiom_one(op: Table) -> None:
    for a in range(len(op)):
        if op[a][a] != a:
            raise QuandleAxiomError(
                "I", (a,), f"axiom I fails at a={a} (idempotence: {a}*{a} = {op[a][a]})"
            )


def _axiom_two(op: Table) -> None:
    n = len(op)
    for b in range(n):
        seen: Dict[int, int] = {}
        for a in range(n):
            c = op[a][b]
            if c in seen:
                raise QuandleAxiomError(
                    "II",
                    (seen[c], a, b),
                    f"axiom II fails at b={b} (right invertibility: "
                    f"{seen[c]}*{b} = {a}*{b} = {c})",
                )
            seen[c] = a


def _axiom_three(op: Table) -> None:
    n = len(op)
    for a, b, c in product(range(n), repeat=3):
        if op[op[a][b]][c] != op[op[a][c]][op[b][c]]:
            raise QuandleAxiomError(
                "III",
                (a, b, c),
                f"axiom III fails at (a,b,c)=({a},{b},{c}) (self-distributivity)",
            )


def verify_quandle(
    op_table: Sequence[Sequence[int]],
    name: str = "",
    labels: Sequence[str] = (),
    allow_rack: bool = False,
) -> Quandle:
    """
    Validate an operation table and derive its right inverse

    Args:
        op_table: Square table with op_table[a][b] = a∗b
        name: Display name
        labels: Optional display labels, one per element
        allow_rack: Accept tables satisfying only axioms II and III; the
            result then carries is_rack=True

    Returns:
        Validated Quandle

    Raises:
        ValueError: If the table is not square or has out-of-range entries
        QuandleAxiomError: With the first violated axiom and a witness
    """
    op = _check_shape(op_table)
    is_rack = False
    if allow_rack:
        _axiom_two(op)
        _axiom_three(op)
        try:
            _axiom_one(op)
        except QuandleAxiomError:
            is_rack = True
    else:
        _axiom_one(op)
        _axiom_two(op)
        _axiom_three(op)

    if labels and len(labels) != len(op):
        raise ValueError("One label per element is required")
    kind = "rack" if is_rack else "quandle"
    logger.debug(f"Validated {kind} {name or '<table>'} of order {len(op)}")
    return Quandle(op, _right_inverse(op), name, tuple(labels), is_rack)


@dataclass(frozen=True)
class QuandleHom:
    """Element map f with f(a∗b) = f(a)∗f(b)"""

    source: Quandle
    target: Quandle
    mapping: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source.n:
            raise ValueError("Homomorphism needs one image per source element")
        if any(not 0 <= x < self.target.n for x in self.mapping):
            raise ValueError("Homomorphism image out of range")
        f = self.mapping
        for a, b in product(self.source.elements, repeat=2):
            if f[self.source.op[a][b]] != self.target.op[f[a]][f[b]]:
                raise ValueError(f"Map is not a homomorphism at ({a},{b})")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def is_bijective(self) -> bool:
        return self.source.n == self.target.n and len(set(self.mapping)) == self.source.n

    @classmethod
    def identity(cls, quandle: Quandle) -> "QuandleHom":
        return cls(quandle, quandle, tuple(quandle.elements))
