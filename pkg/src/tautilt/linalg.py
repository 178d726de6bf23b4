"""Exact dense linear algebra over the rationals.

Everything downstream (Hom spaces, kernels, the AR translate) reduces to
row reduction of small dense matrices with `fractions.Fraction` entries.
Matrices are immutable; zero-row and zero-column shapes are legal and show
up constantly as fibers over vertices of dimension zero.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


class QMatrix:
    """An immutable rows x cols matrix of exact rationals (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Fraction | int]):
        ent = tuple(Q(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]], cols: int | None = None) -> "QMatrix":
        r = len(rows)
        if r == 0:
            return cls(0, 0 if cols is None else cols, ())
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, vec: Sequence[Fraction | int]) -> "QMatrix":
        return cls(len(vec), 1, vec)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols}, {self.to_rows()!r})"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: Fraction | int) -> "QMatrix":
        c = Q(c)
        return QMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = [Q(0)] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a == 0:
                    continue
                obase = k * other.cols
                rbase = i * other.cols
                for j in range(other.cols):
                    b = other.entries[obase + j]
                    if b != 0:
                        out[rbase + j] += a * b
        return QMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((self.entry(i, j) * Q(vec[j]) for j in range(self.cols)), Q(0))
                     for i in range(self.rows))

    def _same_shape(self, other: "QMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def hstack(mats: Sequence[QMatrix]) -> QMatrix:
    """Concatenate matrices with equal row counts side by side."""
    if not mats:
        return QMatrix(0, 0, ())
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise ValueError("row count mismatch")
    rows = [[e for m in mats for e in m.row(i)] for i in range(r)]
    return QMatrix.from_rows(rows, cols=sum(m.cols for m in mats))


def vstack(mats: Sequence[QMatrix]) -> QMatrix:
    """Concatenate matrices with equal column counts on top of each other."""
    if not mats:
        return QMatrix(0, 0, ())
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise ValueError("column count mismatch")
    return QMatrix(sum(m.rows for m in mats), c, [e for m in mats for e in m.entries])


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    rows = m.to_rows()
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        ir = next((r for r in range(pr, m.rows) if rows[r][pc] != 0), None)
        if ir is None:
            continue
        rows[pr], rows[ir] = rows[ir], rows[pr]
        inv = 1 / rows[pr][pc]
        rows[pr] = [e * inv for e in rows[pr]]
        for r in range(m.rows):
            if r != pr and rows[r][pc] != 0:
                f = rows[r][pc]
                rows[r] = [e - f * p for e, p in zip(rows[r], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return QMatrix.from_rows(rows, cols=m.cols), tuple(pivots)


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: QMatrix) -> QMatrix:
    """Columns form a basis of the null space; shape cols x (cols - rank)."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    cols = []
    for f in free:
        v = [Q(0)] * m.cols
        v[f] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red.entry(r, f)
        cols.append(v)
    return QMatrix(m.cols, len(cols), [v[i] for i in range(m.cols) for v in cols])


def solve(m: QMatrix, b: Sequence[Fraction | int]) -> tuple[Fraction, ...] | None:
    """One particular solution of m x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = hstack([m, QMatrix.column(b)])
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Q(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.entry(r, m.cols)
    return tuple(x)


def row_space_basis(m: QMatrix) -> QMatrix:
    """Canonical (echelonized) basis of the row space, one basis vector per row."""
    red, pivots = rref(m)
    return QMatrix.from_rows([list(red.row(i)) for i in range(len(pivots))], cols=m.cols)


def det(m: QMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    rows = m.to_rows()
    result = Q(1)
    for c in range(n):
        ir = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if ir is None:
            return Q(0)
        if ir != c:
            rows[c], rows[ir] = rows[ir], rows[c]
            result = -result
        result *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != 0:
                f = rows[r][c] * inv
                rows[r] = [e - f * p for e, p in zip(rows[r], rows[c])]
    return result


def invert(m: QMatrix) -> QMatrix:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    red, pivots = rref(hstack([m, QMatrix.identity(n)]))
    if len(pivots) != n or any(p >= n for p in pivots):
        raise ValueError("matrix is singular")
    return QMatrix(n, n, [red.entry(i, n + j) for i in range(n) for j in range(n)])


def matrix_power(m: QMatrix, k: int) -> QMatrix:
    if m.rows != m.cols:
        raise ValueError("power of non-square matrix")
    result = QMatrix.identity(m.rows)
    base = m
    while k > 0:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def grid_points(nvars: int, bound: int):
    """Deterministic exhaustive grid {0..bound}^nvars, cheap points first.

    A polynomial of degree <= bound in each variable that vanishes on the
    whole grid is identically zero, so scanning it decides non-vanishing.
    """
    seen = set()
    for t in range(1, bound + 2):
        p = tuple(t**k for k in range(nvars))
        if p not in seen:
            seen.add(p)
            yield p
    for p in itertools.product(range(bound + 1), repeat=nvars):
        if p not in seen:
            yield p
