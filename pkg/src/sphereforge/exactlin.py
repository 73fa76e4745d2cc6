"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Everything that needs the ground
field goes through :func:`scalar`, so swapping in a prime field only touches
this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple of Scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a field element."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def format_scalar(x: Fraction) -> str:
    return str(x)


class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        if entries is None:
            grid = tuple((ZERO,) * cols for _ in range(rows))
        else:
            grid = tuple(tuple(scalar(e) for e in row) for row in entries)
            if len(grid) != rows or any(len(row) != cols for row in grid):
                raise ValueError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.entries = grid
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [tuple(scalar(x) for x in c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length does not match row count")
        return cls._raw(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def _raw(cls, rows: int, cols: int, grid) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = grid
        m._hash = None
        return m

    # -- basic protocol -----------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    # -- arithmetic ---------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            out = []
            for row in self.entries:
                nz = [(k, x) for k, x in enumerate(row) if x]
                out.append(tuple(sum((x * col[k] for k, x in nz), ZERO) for col in ocols))
            return Matrix._raw(self.rows, other.cols, tuple(out))
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((x * v for x, v in zip(row, vec) if x and v), ZERO) for row in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))


def hstack(blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(rows or 0, 0)
    n = blocks[0].rows
    if any(b.rows != n for b in blocks):
        raise ValueError("hstack row mismatch")
    grid = tuple(tuple(x for b in blocks for x in b.entries[i]) for i in range(n))
    return Matrix._raw(n, sum(b.cols for b in blocks), grid)


def vstack(blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(0, cols or 0)
    n = blocks[0].cols
    if any(b.cols != n for b in blocks):
        raise ValueError("vstack column mismatch")
    return Matrix._raw(sum(b.rows for b in blocks), n, tuple(r for b in blocks for r in b.entries))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = []
    c0 = 0
    for b in blocks:
        left = (ZERO,) * c0
        right = (ZERO,) * (cols - c0 - b.cols)
        for r in b.entries:
            grid.append(left + r + right)
        c0 += b.cols
    return Matrix._raw(rows, cols, tuple(grid))


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack([hstack(list(row)) for row in grid])


# -- elimination ----------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns).

    Pivot choice: leftmost column with a nonzero entry, first such row.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        nz = [(k, prow[k]) for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k, x in nz:
                        row[k] -= f * x
        pivots.append(c)
        r += 1
    return rows, pivots


def rref_with_pivots(m: Matrix) -> tuple[Matrix, list[int]]:
    rows, piv = _rref_rows(m.to_lists(), m.cols)
    return Matrix._raw(m.rows, m.cols, tuple(tuple(r) for r in rows)), piv


def rref(m: Matrix) -> Matrix:
    return rref_with_pivots(m)[0]


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref_rows(m.to_lists(), m.cols)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space; one vector per free column, in column order."""
    rows, piv = _rref_rows(m.to_lists(), m.cols)
    pivset = set(piv)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def image_basis(m: Matrix) -> list[Vector]:
    """Pivot columns of ``m``: a basis of its column space drawn from its own columns."""
    _, piv = _rref_rows(m.to_lists(), m.cols)
    return [m.column(j) for j in piv]


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some x with m @ x == b, or None when the system is inconsistent."""
    b = [scalar(x) for x in b]
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = [list(row) + [bi] for row, bi in zip(m.entries, b)]
    rows, piv = _rref_rows(aug, m.cols + 1)
    if piv and piv[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(piv):
        x[p] = rows[i][m.cols]
    return tuple(x)


def complement_basis(sub: Sequence[Sequence], ambient_dim: int) -> list[Vector]:
    """Standard basis vectors completing ``sub`` to a basis (first-fit).

    Raises ValueError when ``sub`` is linearly dependent.
    """
    sub = [tuple(scalar(x) for x in v) for v in sub]
    k = len(sub)
    grid = [[v[i] for v in sub] + [ONE if i == j else ZERO for j in range(ambient_dim)]
            for i in range(ambient_dim)]
    _, piv = _rref_rows(grid, k + ambient_dim)
    if piv[:k] != list(range(k)):
        raise ValueError("subspace basis is linearly dependent")
    out = []
    for p in piv[k:]:
        e = [ZERO] * ambient_dim
        e[p - k] = ONE
        out.append(tuple(e))
    return out


def extend_basis(sub: Sequence[Vector], candidates: Sequence[Vector], dim: int) -> list[int]:
    """Indices of candidates that extend the independent set ``sub`` (first-fit)."""
    k = len(sub)
    cols = list(sub) + list(candidates)
    if not cols:
        return []
    grid = [[c[i] for c in cols] for i in range(dim)]
    _, piv = _rref_rows(grid, len(cols))
    if piv[:k] != list(range(k)):
        raise ValueError("subspace basis is linearly dependent")
    return [p - k for p in piv[k:]]


def inverse(m: Matrix) -> Matrix | None:
    if m.rows != m.cols:
        return None
    n = m.rows
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.entries)]
    rows, piv = _rref_rows(aug, 2 * n)
    if piv[:n] != list(range(n)) or (len(piv) > n and piv[n] < n):
        return None
    if len([p for p in piv if p < n]) != n:
        return None
    return Matrix._raw(n, n, tuple(tuple(r[n:]) for r in rows))


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def coordinates(basis: Sequence[Vector], v: Sequence, dim: int) -> Vector | None:
    """Coefficients of ``v`` in the independent family ``basis`` (None if outside the span)."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    return solve(Matrix.from_columns(basis, dim), v)
