"""
Finite Groups

Groups given by multiplication tables over the indices 0..n-1, with
constructors for cyclic and symmetric groups and direct products.
"""

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional, Sequence, Tuple

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table with identity and inverse lookups (table[a][b] = a·b)"""

    table: Table
    identity: int
    inverses: Tuple[int, ...]
    name: str = ""
    labels: Tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        base = a if k >= 0 else self.inverses[a]
        result = self.identity
        for _ in range(abs(k)):
            result = self.table[result][base]
        return result

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def group_from_table(
    table: Sequence[Sequence[int]], name: str = "", labels: Sequence[str] = ()
) -> FiniteGroup:
    """
    Wrap a multiplication table, deriving the identity and inverses

    Raises:
        ValueError: If the table is not square, has no two-sided identity, or
            some element has no inverse
    """
    rows = tuple(tuple(int(x) for x in row) for row in table)
    n = len(rows)
    if any(len(row) != n for row in rows) or any(not 0 <= x < n for row in rows for x in row):
        raise ValueError("Group table must be square with entries in range")

    identity: Optional[int] = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("Group table has no identity element")

    inverses = []
    for a in range(n):
        inverse = next((b for b in range(n) if rows[a][b] == identity == rows[b][a]), None)
        if inverse is None:
            raise ValueError(f"Element {a} has no inverse")
        inverses.append(inverse)
    return FiniteGroup(rows, identity, tuple(inverses), name, tuple(labels))


def verify_group(group: FiniteGroup) -> bool:
    """Exhaustive check of associativity, identity and inverse laws"""
    n = group.order
    t = group.table
    if any(len(row) != n for row in t) or not 0 <= group.identity < n:
        return False
    for a in range(n):
        if t[group.identity][a] != a or t[a][group.identity] != a:
            return False
        inverse = group.inverses[a]
        if t[a][inverse] != group.identity or t[inverse][a] != group.identity:
            return False
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in product(range(n), repeat=3))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("Cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(table, name=f"Z{n}")


def symmetric_group(k: int) -> FiniteGroup:
    """
    Permutations of k letters in lexicographic order

    The product is composition with the right factor applied first:
    (g·h)(x) = g(h(x)).
    """
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(g[h[x]] for x in range(k))] for h in perms] for g in perms]
    labels = ["".join(str(x) for x in p) for p in perms]
    return group_from_table(table, name=f"S{k}", labels=labels)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G × H with (a, b) stored at index a*|H| + b"""
    m = h.order
    size = g.order * m
    table = [
        [g.mul(x // m, y // m) * m + h.mul(x % m, y % m) for y in range(size)]
        for x in range(size)
    ]
    return group_from_table(table, name=f"{g.name}x{h.name}")
