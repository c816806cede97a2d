"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries. Matrices and
subspaces are immutable values; a subspace is always stored by its reduced
row-echelon basis, so two subspaces are equal exactly when their bases are.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or 'p/q' strings")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    if type(values) is tuple and all(type(v) is Fraction for v in values):
        return values
    return tuple(as_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence[Fraction]) -> Vector:
    c = as_scalar(c)
    return tuple(c * x for x in v)


def combine(coeffs: Sequence, vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    """Linear combination sum_i coeffs[i] * vectors[i] in dimension ``n``."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] += c * x
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix with row-major entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = vector(values)
        return cls(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(self.columns(), self.rows)

    T = property(transpose)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def _check_same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    @cached_property
    def _sparse_columns(self) -> tuple:
        c = self.cols
        e = self.entries
        return tuple(
            tuple((i, e[i * c + j]) for i in range(self.rows) if e[i * c + j]) for j in range(c)
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix has {self.cols} columns, vector has length {len(v)}")
        out = [ZERO] * self.rows
        cols = self._sparse_columns
        for j, b in enumerate(v):
            if b:
                for i, a in cols[j]:
                    out[i] += a * b
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for c in ocols:
                s = ZERO
                for k, a in nz:
                    b = c[k]
                    if b:
                        s += a * b
                out.append(s)
        return Matrix(self.rows, other.cols, tuple(out))

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            inv = inverse(self)
            if inv is None:
                raise ZeroDivisionError("matrix is singular")
            return inv.power(-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def flatten(self) -> Vector:
        return self.entries

    def __str__(self) -> str:
        rows = [[format_scalar(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(s) for r in rows for s in r), default=1)
        return "\n".join(" ".join(s.rjust(width) for s in r) for r in rows)


def format_scalar(x: Fraction) -> str:
    x = as_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (nonzero rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        nz = [(k, x) for k, x in enumerate(prow) if x and k >= c]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            ri = rows[i]
            for k, x in nz:
                ri[k] -= f * x
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form. Zero rows are kept at the bottom, so the shape is unchanged."""
    rows, _ = _rref_rows([list(r) for r in m.to_rows()], m.cols)
    padded = rows + [[ZERO] * m.cols for _ in range(m.rows - len(rows))]
    return Matrix.from_rows(padded, m.cols) if m.rows else m


def rank(m: Matrix) -> int:
    rows, _ = _rref_rows([list(r) for r in m.to_rows()], m.cols)
    return len(rows)


def _kernel_from_rref(rows: list[list[Fraction]], pivots: list[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(rows, pivots):
            if r[free]:
                v[p] = -r[free]
        basis.append(tuple(v))
    return basis


def kernel(m: Matrix) -> "Subspace":
    """Right null space {v : m v = 0}."""
    rows, pivots = _rref_rows([list(r) for r in m.to_rows()], m.cols)
    return Subspace.span(_kernel_from_rref(rows, pivots, m.cols), m.cols)


def solve(m: Matrix, rhs: Sequence) -> Vector | None:
    """One exact solution of ``m x = rhs``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rhs = vector(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"rhs has length {len(rhs)}, matrix has {m.rows} rows")
    aug = [list(m.row(i)) + [rhs[i]] for i in range(m.rows)]
    rows, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in zip(rows, pivots):
        x[p] = r[m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix | None:
    if not m.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    aug = [list(m.row(i)) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    rows, pivots = _rref_rows(aug, 2 * n)
    if len(rows) < n or pivots[n - 1] != n - 1:
        return None
    return Matrix.from_rows([r[n:] for r in rows], n)


def determinant(m: Matrix) -> Fraction:
    if not m.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    a = [list(r) for r in m.to_rows()]
    n = m.rows
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[i][k] -= f * a[c][k]
    return det


class EchelonBasis:
    """Incrementally grown row-echelon basis over sparse rows.

    Used for spinning closures and for large homogeneous systems where most
    constraint rows are redundant. Rows are dicts ``{column: value}`` with a
    leading 1 at their pivot.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, dict[int, Fraction]] = {}
        self._order: list[int] = []

    def __len__(self) -> int:
        return len(self._order)

    @property
    def is_full(self) -> bool:
        return len(self._order) == self.dim

    def reduce(self, vec) -> dict[int, Fraction]:
        v = _as_sparse(vec)
        for p in self._order:
            c = v.get(p)
            if not c:
                continue
            for k, x in self._rows[p].items():
                nv = v.get(k, ZERO) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def add(self, vec) -> bool:
        """Add ``vec`` to the span; return True when the dimension grew."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        row = {k: x * inv for k, x in v.items()}
        self._rows[p] = row
        insort(self._order, p)
        return True

    def pivots(self) -> list[int]:
        return list(self._order)

    def rref_rows(self) -> list[dict[int, Fraction]]:
        """Fully reduced rows, ordered by pivot."""
        done: list[tuple[int, dict[int, Fraction]]] = []
        for p in reversed(self._order):
            row = dict(self._rows[p])
            for q, qrow in done:
                c = row.get(q)
                if not c:
                    continue
                for k, x in qrow.items():
                    nv = row.get(k, ZERO) - c * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            done.append((p, row))
        done.reverse()
        return [r for _, r in done]

    def to_subspace(self) -> "Subspace":
        rows = self.rref_rows()
        return Subspace(self.dim, tuple(_dense(r, self.dim) for r in rows))

    def null_space(self) -> "Subspace":
        """Kernel of the system whose rows were added."""
        rows = self.rref_rows()
        pivots = list(self._order)
        dense_rows = [list(_dense(r, self.dim)) for r in rows]
        return Subspace.span(_kernel_from_rref(dense_rows, pivots, self.dim), self.dim)


def _as_sparse(vec) -> dict[int, Fraction]:
    if isinstance(vec, dict):
        return {k: as_scalar(x) for k, x in vec.items() if x}
    return {k: as_scalar(x) for k, x in enumerate(vec) if x}


def _dense(row: dict[int, Fraction], n: int) -> Vector:
    out = [ZERO] * n
    for k, x in row.items():
        out[k] = x
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its reduced row-echelon basis.

    Construct with :meth:`span`; the raw constructor assumes the basis is
    already canonical.
    """

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            v = vector(v)
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append(list(v))
        reduced, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def _pivots(self) -> tuple:
        return tuple(next(k for k, x in enumerate(b) if x) for b in self.basis)

    @cached_property
    def _sparse_basis(self) -> tuple:
        return tuple(tuple((k, x) for k, x in enumerate(b) if x) for b in self.basis)

    def pivots(self) -> list[int]:
        return list(self._pivots)

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in the canonical basis, or None when v is outside."""
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        coeffs = tuple(v[p] for p in self._pivots)
        w = list(v)
        for c, row in zip(coeffs, self._sparse_basis):
            if c:
                for k, x in row:
                    w[k] -= c * x
        if any(w):
            return None
        return coeffs

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace.span([m @ b for b in self.basis], m.rows)

    def is_invariant_under(self, m: Matrix) -> bool:
        return all(self.contains(m @ b) for b in self.basis)

    def echelon(self) -> EchelonBasis:
        e = EchelonBasis(self.ambient_dim)
        for b in self.basis:
            e.add(b)
        return e

    def complement_basis(self) -> list[Vector]:
        """Standard basis vectors completing this subspace to the whole space."""
        piv = set(self.pivots())
        return [unit_vector(self.ambient_dim, i) for i in range(self.ambient_dim) if i not in piv]

    def annihilator(self) -> "Subspace":
        """{w : w . b = 0 for all basis vectors b}."""
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix.from_rows(self.basis, self.ambient_dim))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.basis + b.basis, a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    # x = sum s_i a_i = sum t_j b_j  <=>  [A | -B] (s, t) = 0
    cols = list(a.basis) + [scale_vector(-1, v) for v in b.basis]
    ker = kernel(Matrix.from_columns(cols, n))
    return Subspace.span([combine(k[:a.dim], a.basis, n) for k in ker.basis], n)


def is_direct_sum(parts: Sequence[Subspace]) -> bool:
    """True iff the parts are independent: dimensions add up to the dimension of their sum."""
    if not parts:
        return True
    n = parts[0].ambient_dim
    for p in parts:
        _check_ambient(parts[0], p)
    total = Subspace.span([v for p in parts for v in p.basis], n)
    return total.dim == sum(p.dim for p in parts)


def sum_of(parts: Sequence[Subspace], n: int) -> Subspace:
    return Subspace.span([v for p in parts for v in p.basis], n)


def solve_sparse(equations: Iterable[tuple[dict, object]], nvars: int) -> Vector | None:
    """Solve sum_k row[k] x_k = rhs for sparse ``(row, rhs)`` pairs.

    Returns the solution with free variables set to zero, or None when the
    system is inconsistent.
    """
    ech = EchelonBasis(nvars + 1)
    for row, rhs in equations:
        v = {k: as_scalar(x) for k, x in row.items() if x}
        rhs = as_scalar(rhs)
        if rhs:
            v[nvars] = rhs
        if v:
            ech.add(v)
    x = [ZERO] * nvars
    for p, row in zip(ech.pivots(), ech.rref_rows()):
        if p == nvars:
            return None
        x[p] = row.get(nvars, ZERO)
    return tuple(x)
