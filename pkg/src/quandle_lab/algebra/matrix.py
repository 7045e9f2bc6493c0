"""
Integer Matrices

Exact dense matrices over Z stored in object-dtype numpy arrays, so every
entry is an arbitrary-precision Python int. Provides the Smith normal form
over Z (with both transformation matrices and their inverses) and the Howell
normal form over Z/mZ, plus the kernel and solving helpers built on them.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)

MatrixLike = Union["IntegerMatrix", Sequence[Sequence[int]], np.ndarray]


def _exact(value: object) -> int:
    if isinstance(value, (int, np.integer)):
        return int(value)
    raise TypeError(f"Matrix entries must be integers, got {type(value).__name__}")


def _identity_array(n: int) -> np.ndarray:
    array = np.zeros((n, n), dtype=object)
    for i in range(n):
        array[i, i] = 1
    return array


def _zeros_array(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


class IntegerMatrix:
    """Immutable dense matrix over Z"""

    __slots__ = ("_entries",)

    def __init__(self, entries: MatrixLike, cols: Optional[int] = None):
        """
        Build a matrix from nested rows

        Args:
            entries: Rows of integers, a numpy array or another IntegerMatrix
            cols: Column count, required to shape a matrix with no rows

        Raises:
            ValueError: If the rows are ragged
            TypeError: If an entry is not an integer
        """
        if isinstance(entries, IntegerMatrix):
            array = entries._entries.copy()
        else:
            if isinstance(entries, np.ndarray):
                rows = entries.tolist()
            else:
                rows = [list(r) for r in entries]
            width = cols if cols is not None else (len(rows[0]) if rows else 0)
            if any(len(row) != width for row in rows):
                raise ValueError("Matrix rows must all have the same length")
            array = np.empty((len(rows), width), dtype=object)
            for i, row in enumerate(rows):
                for j, value in enumerate(row):
                    array[i, j] = _exact(value)
        array.flags.writeable = False
        self._entries = array

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "IntegerMatrix":
        matrix = object.__new__(cls)
        frozen = np.array(array, dtype=object, copy=True)
        frozen.flags.writeable = False
        matrix._entries = frozen
        return matrix

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls._wrap(_zeros_array(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls._wrap(_identity_array(n))

    @property
    def rows(self) -> int:
        return int(self._entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self._entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        """Writeable object-dtype copy of the entries"""
        array = self._entries.copy()
        array.flags.writeable = True
        return array

    def to_list(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._entries]

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._entries[i])

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._entries[:, j])

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return int(self._entries[key])

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix._wrap(self._entries.dot(other._entries))

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")
        return IntegerMatrix._wrap(self._entries + other._entries)

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        return self + (-other)

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix._wrap(-self._entries)

    def scale(self, factor: int) -> "IntegerMatrix":
        return IntegerMatrix._wrap(self._entries * int(factor))

    def reduce(self, modulus: int) -> "IntegerMatrix":
        """Entries reduced into [0, modulus)"""
        return IntegerMatrix._wrap(self._entries % modulus)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix._wrap(self._entries.T)

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return IntegerMatrix._wrap(np.hstack([self._entries, other._entries]))

    def vstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.cols:
            raise ValueError("vstack needs equal column counts")
        return IntegerMatrix._wrap(np.vstack([self._entries, other._entries]))

    def select(
        self, rows: Optional[Sequence[int]] = None, cols: Optional[Sequence[int]] = None
    ) -> "IntegerMatrix":
        """Submatrix on the given row and column indices (all when omitted)"""
        row_index = list(range(self.rows)) if rows is None else list(rows)
        col_index = list(range(self.cols)) if cols is None else list(cols)
        if not row_index or not col_index:
            return IntegerMatrix.zeros(len(row_index), len(col_index))
        return IntegerMatrix._wrap(self._entries[np.ix_(row_index, col_index)])

    def is_zero(self) -> bool:
        return not bool(np.any(self._entries != 0))

    def is_diagonal(self) -> bool:
        for i, j in zip(*np.nonzero(self._entries != 0)):
            if i != j:
                return False
        return True

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(int(self._entries[i, i]) for i in range(min(self.shape)))

    def determinant(self) -> int:
        """
        Exact determinant by fraction-free Bareiss elimination

        Raises:
            ValueError: If the matrix is not square
        """
        if self.rows != self.cols:
            raise ValueError("Determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_list()
        sign = 1
        previous = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.determinant()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and not bool(np.any(self._entries != other._entries))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.to_list()!r})"


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid

    Returns:
        (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class SmithForm:
    """
    Smith normal form U·M·V = D with unimodular U and V

    The inverses of U and V are tracked alongside so callers can change
    coordinates in both directions without a separate inversion.
    """

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix
    u_inv: IntegerMatrix
    v_inv: IntegerMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.d.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for x in self.invariant_factors if x != 0)


class _Reducer:
    """Row and column operations that keep U, U⁻¹, V, V⁻¹ in step with the work matrix"""

    def __init__(self, matrix: IntegerMatrix):
        self.work = matrix.to_array()
        rows, cols = self.work.shape
        self.u = _identity_array(rows)
        self.u_inv = _identity_array(rows)
        self.v = _identity_array(cols)
        self.v_inv = _identity_array(cols)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.work[[i, j]] = self.work[[j, i]]
        self.u[[i, j]] = self.u[[j, i]]
        self.u_inv[:, [i, j]] = self.u_inv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.work[:, [i, j]] = self.work[:, [j, i]]
        self.v[:, [i, j]] = self.v[:, [j, i]]
        self.v_inv[[i, j]] = self.v_inv[[j, i]]

    def add_row(self, target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        self.work[target] = self.work[target] + factor * self.work[source]
        self.u[target] = self.u[target] + factor * self.u[source]
        self.u_inv[:, source] = self.u_inv[:, source] - factor * self.u_inv[:, target]

    def add_col(self, target: int, source: int, factor: int) -> None:
        # col_target += factor * col_source
        self.work[:, target] = self.work[:, target] + factor * self.work[:, source]
        self.v[:, target] = self.v[:, target] + factor * self.v[:, source]
        self.v_inv[source] = self.v_inv[source] - factor * self.v_inv[target]

    def negate_row(self, i: int) -> None:
        self.work[i] = -self.work[i]
        self.u[i] = -self.u[i]
        self.u_inv[:, i] = -self.u_inv[:, i]

    def place_pivot(self, t: int) -> bool:
        """Move the smallest nonzero |entry| of the trailing block to (t, t)"""
        block = self.work[t:, t:]
        mask = block != 0
        if not mask.any():
            return False
        coords = np.argwhere(mask)
        magnitudes = np.abs(block[mask])
        k = int(np.argmin(magnitudes))
        self.swap_rows(t, t + int(coords[k][0]))
        self.swap_cols(t, t + int(coords[k][1]))
        return True

    def result(self) -> SmithForm:
        return SmithForm(
            u=IntegerMatrix._wrap(self.u),
            d=IntegerMatrix._wrap(self.work),
            v=IntegerMatrix._wrap(self.v),
            u_inv=IntegerMatrix._wrap(self.u_inv),
            v_inv=IntegerMatrix._wrap(self.v_inv),
        )


def _nonzero_offsets(vector: np.ndarray) -> List[int]:
    return [int(i) for i in np.nonzero(vector != 0)[0]]


def smith_normal_form(matrix: IntegerMatrix) -> SmithForm:
    """
    Smith normal form over Z

    Pivots on the smallest nonzero absolute value, ties broken in (row, col)
    order, so the factorization is reproducible.

    Args:
        matrix: Any integer matrix, empty shapes included

    Returns:
        SmithForm with U·M·V = D, D diagonal, d1 | d2 | ... and d_i >= 0
    """
    reducer = _Reducer(matrix)
    work = reducer.work
    rows, cols = work.shape

    for t in range(min(rows, cols)):
        if not reducer.place_pivot(t):
            break
        while True:
            pivot = work[t, t]
            for offset in _nonzero_offsets(work[t + 1:, t]):
                i = t + 1 + offset
                reducer.add_row(i, t, -(work[i, t] // pivot))
            for offset in _nonzero_offsets(work[t, t + 1:]):
                j = t + 1 + offset
                reducer.add_col(j, t, -(work[t, j] // pivot))

            if np.any(work[t + 1:, t] != 0) or np.any(work[t, t + 1:] != 0):
                reducer.place_pivot(t)
                continue

            trailing = work[t + 1:, t + 1:]
            offenders = np.argwhere(trailing % pivot != 0) if trailing.size else []
            if len(offenders) == 0:
                break
            reducer.add_row(t, t + 1 + int(offenders[0][0]), 1)

        if work[t, t] < 0:
            reducer.negate_row(t)

    form = reducer.result()
    logger.debug(f"Smith form of {matrix.shape} matrix has rank {form.rank}")
    return form


def _normalizing_unit(value: int, modulus: int) -> int:
    """A unit u of Z/mZ with u*value ≡ gcd(value, modulus)"""
    g = gcd(value, modulus)
    reduced = modulus // g
    if reduced == 1:
        return 1
    base = pow(value // g, -1, reduced)
    for k in range(g):
        candidate = base + k * reduced
        if gcd(candidate, modulus) == 1:
            return candidate
    raise ArithmeticError(f"no unit normalizes {value} mod {modulus}")


def howell_form(matrix: IntegerMatrix, modulus: int) -> IntegerMatrix:
    """
    Howell normal form over Z/mZ

    The returned rows span the same Z/mZ-module as the rows of the input, and
    for every j the rows with zeros in the first j columns span every vector
    of that module with zeros there. Zero rows are dropped.

    Args:
        matrix: Integer matrix, read modulo `modulus`
        modulus: m >= 2

    Returns:
        Matrix whose rows are the Howell basis

    Raises:
        ValueError: If modulus < 2
    """
    if modulus < 2:
        raise ValueError(f"Howell form needs a modulus >= 2, got {modulus}")

    cols = matrix.cols
    reduced = matrix.to_array() % modulus
    rows: List[np.ndarray] = [reduced[i].copy() for i in range(matrix.rows)]
    while len(rows) < cols:
        rows.append(_zeros_array(1, cols)[0])

    r = 0
    for c in range(cols):
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b == 0:
                continue
            a = rows[r][c]
            g, s, t = extended_gcd(a, b)
            top, bottom = rows[r], rows[i]
            rows[r] = (s * top + t * bottom) % modulus
            rows[i] = ((-b // g) * top + (a // g) * bottom) % modulus

        pivot = rows[r][c]
        if pivot == 0:
            continue
        rows[r] = (rows[r] * _normalizing_unit(pivot, modulus)) % modulus
        pivot = rows[r][c]

        for i in range(r):
            q = rows[i][c] // pivot
            if q:
                rows[i] = (rows[i] - q * rows[r]) % modulus

        annihilated = (rows[r] * (modulus // pivot)) % modulus
        if np.any(annihilated != 0):
            rows.append(annihilated)
        r += 1

    logger.debug(f"Howell form of {matrix.shape} matrix mod {modulus} has {r} rows")
    if r == 0:
        return IntegerMatrix.zeros(0, cols)
    return IntegerMatrix._wrap(np.vstack(rows[:r]))


def left_kernel(matrix: IntegerMatrix, modulus: Optional[int] = None) -> IntegerMatrix:
    """
    Generators of {x : x·M = 0}

    Over Z (modulus None) the rows are a basis of a saturated sublattice,
    read off the Smith form. Over Z/mZ they are the right halves of the
    Howell rows of [M | I] whose left half vanishes.
    """
    if modulus is None:
        form = smith_normal_form(matrix)
        return form.u.select(rows=range(form.rank, matrix.rows))

    augmented = matrix.reduce(modulus).hstack(IntegerMatrix.identity(matrix.rows))
    howell = howell_form(augmented, modulus)
    kept = [
        howell.row(i)[matrix.cols:]
        for i in range(howell.rows)
        if not any(howell.row(i)[: matrix.cols])
    ]
    return IntegerMatrix(kept, cols=matrix.rows)


def solve_left(
    matrix: IntegerMatrix,
    target: Sequence[int],
    modulus: Optional[int] = None,
    form: Optional[SmithForm] = None,
) -> Optional[List[int]]:
    """
    Find some x with x·M = target over Z or Z/mZ

    Args:
        matrix: Coefficient matrix M
        target: Right-hand side, length M.cols
        modulus: None for Z, otherwise m
        form: Precomputed Smith form of M

    Returns:
        A solution as a list of length M.rows, or None if none exists
    """
    form = form or smith_normal_form(matrix)
    h = (IntegerMatrix([list(target)], cols=matrix.cols) @ form.v).row(0)
    factors = form.invariant_factors
    y = [0] * matrix.rows

    for j, value in enumerate(h):
        d = factors[j] if j < len(factors) else 0
        if modulus is None:
            if d == 0:
                if value != 0:
                    return None
            elif value % d:
                return None
            else:
                y[j] = value // d
            continue

        value %= modulus
        g = gcd(d, modulus)
        if value % g:
            return None
        if g == modulus:
            continue
        reduced = modulus // g
        y[j] = (value // g) * pow((d // g) % reduced, -1, reduced) % reduced

    solution = (IntegerMatrix([y], cols=matrix.rows) @ form.u).row(0)
    if modulus is not None:
        solution = tuple(x % modulus for x in solution)
    return list(solution)


def rank_mod_p(matrix: IntegerMatrix, p: int) -> int:
    """Rank over the prime field F_p by Gaussian elimination"""
    a = [[x % p for x in row] for row in matrix.to_list()]
    rank = 0
    for c in range(matrix.cols):
        pivot_row = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inverse = pow(a[rank][c], -1, p)
        a[rank] = [(x * inverse) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                factor = a[i][c]
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank
