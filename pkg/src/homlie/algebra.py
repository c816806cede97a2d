"""Hom-Lie superalgebras given by structure constants and a twisting map."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

from .linalg import (
    ONE,
    ZERO,
    DimensionMismatch,
    Matrix,
    Subspace,
    Vector,
    inverse,
    unit_vector,
    vector,
    zero_vector,
)


class InvalidAlgebra(ValueError):
    """Structure constants or twisting map violate a defining invariant."""


class ParityViolation(InvalidAlgebra):
    pass


class SkewViolation(InvalidAlgebra):
    pass


class AlphaDegreeViolation(InvalidAlgebra):
    pass


class NotAlphaFixed(ValueError):
    """ad_k was requested for an element x with alpha(x) != x."""


class NotAutomorphism(ValueError):
    pass


def skew_sign(pi: int, pj: int) -> int:
    """Coefficient s with [e_j, e_i] = s [e_i, e_j]."""
    return 1 if pi and pj else -1


@dataclass(frozen=True, eq=False)
class HomLieSuperAlgebra:
    """A finite-dimensional Hom-Lie superalgebra over Q in a fixed basis.

    ``structure[i][j]`` is the coordinate vector of ``[e_i, e_j]``; the even
    basis vectors come first. ``alpha`` is the twisting map as an ``n x n``
    matrix acting on column vectors.
    """

    name: str
    even_dim: int
    odd_dim: int
    basis_names: tuple
    structure: tuple
    alpha: Matrix
    _sparse: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.even_dim + self.odd_dim
        if len(self.basis_names) != n:
            raise InvalidAlgebra(f"{len(self.basis_names)} basis names for dimension {n}")
        if len(set(self.basis_names)) != n:
            raise InvalidAlgebra("basis names must be distinct")
        if len(self.structure) != n or any(len(row) != n for row in self.structure):
            raise InvalidAlgebra("structure table must be n x n")
        if (self.alpha.rows, self.alpha.cols) != (n, n):
            raise InvalidAlgebra(f"alpha must be {n}x{n}")
        par = self.parity
        for i, j in product(range(n), repeat=2):
            v = self.structure[i][j]
            if len(v) != n:
                raise InvalidAlgebra(f"[{self.basis_names[i]},{self.basis_names[j]}] has wrong length")
            target = (par[i] + par[j]) % 2
            for k, c in enumerate(v):
                if c and par[k] != target:
                    raise ParityViolation(
                        f"[{self.basis_names[i]},{self.basis_names[j]}] has a component along "
                        f"{self.basis_names[k]} of the wrong parity"
                    )
        for i, j in product(range(n), repeat=2):
            if par[i] != par[j] and self.alpha[i, j] != 0:
                raise AlphaDegreeViolation(
                    f"alpha maps {self.basis_names[j]} onto {self.basis_names[i]} of the other parity"
                )
        for i in range(n):
            for j in range(i, n):
                s = skew_sign(par[i], par[j])
                if tuple(s * c for c in self.structure[i][j]) != tuple(self.structure[j][i]):
                    raise SkewViolation(
                        f"[{self.basis_names[j]},{self.basis_names[i]}] != "
                        f"{s}*[{self.basis_names[i]},{self.basis_names[j]}]"
                    )
        sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.structure[i][j]) if c) for j in range(n))
            for i in range(n)
        )
        object.__setattr__(self, "_sparse", sparse)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomLieSuperAlgebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.even_dim == other.even_dim
            and self.odd_dim == other.odd_dim
            and self.basis_names == other.basis_names
            and self.structure == other.structure
            and self.alpha == other.alpha
        )

    def __hash__(self) -> int:
        return hash((self.name, self.basis_names, self.structure, self.alpha))

    def same_structure(self, other: "HomLieSuperAlgebra") -> bool:
        """Equal parities, structure constants and alpha, ignoring names."""
        return (
            self.even_dim == other.even_dim
            and self.odd_dim == other.odd_dim
            and self.structure == other.structure
            and self.alpha == other.alpha
        )

    @classmethod
    def from_brackets(
        cls,
        name: str,
        even: Sequence[str],
        odd: Sequence[str],
        brackets: dict,
        alpha: Matrix | Sequence | None = None,
    ) -> "HomLieSuperAlgebra":
        """Build from ``{(a, b): {basis_name: coeff}}``, completing the table by skew-supersymmetry.

        A pair given in both orders must agree with the skew rule.
        """
        names = tuple(even) + tuple(odd)
        n = len(names)
        index = {b: i for i, b in enumerate(names)}
        par = [0] * len(even) + [1] * len(odd)
        table: list[list[Vector | None]] = [[None] * n for _ in range(n)]
        for (a, b), terms in brackets.items():
            i, j = index[a], index[b]
            v = [ZERO] * n
            for bn, c in terms.items():
                v[index[bn]] += Fraction(c)
            v = tuple(v)
            for (p, q, w) in ((i, j, v), (j, i, tuple(skew_sign(par[i], par[j]) * c for c in v))):
                if table[p][q] is not None and table[p][q] != w:
                    raise SkewViolation(f"conflicting values for [{names[p]},{names[q]}]")
                table[p][q] = w
        structure = tuple(
            tuple(table[i][j] if table[i][j] is not None else zero_vector(n) for j in range(n))
            for i in range(n)
        )
        if alpha is None:
            alpha = Matrix.identity(n)
        elif not isinstance(alpha, Matrix):
            alpha = Matrix.from_rows(alpha, n)
        return cls(name, len(even), len(odd), names, structure, alpha)

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @cached_property
    def parity(self) -> tuple:
        return (0,) * self.even_dim + (1,) * self.odd_dim

    def basis_vector(self, name_or_index) -> Vector:
        i = name_or_index if isinstance(name_or_index, int) else self.basis_names.index(name_or_index)
        return unit_vector(self.dim, i)

    def element(self, terms: dict) -> Vector:
        """Vector from ``{basis_name: coeff}``."""
        v = [ZERO] * self.dim
        for bn, c in terms.items():
            v[self.basis_names.index(bn)] += Fraction(c)
        return tuple(v)

    def even_part(self) -> Subspace:
        return Subspace(self.dim, tuple(unit_vector(self.dim, i) for i in range(self.even_dim)))

    def odd_part(self) -> Subspace:
        return Subspace(self.dim, tuple(unit_vector(self.dim, i) for i in range(self.even_dim, self.dim)))

    def parity_components(self, v: Sequence) -> tuple[Vector, Vector]:
        v = vector(v)
        e = self.even_dim
        return (v[:e] + (ZERO,) * self.odd_dim, (ZERO,) * e + v[e:])

    def parity_of(self, v: Sequence) -> int | None:
        """0 or 1 for nonzero homogeneous vectors, None otherwise."""
        ev, od = self.parity_components(v)
        has_e = any(ev)
        has_o = any(od)
        if has_e and not has_o:
            return 0
        if has_o and not has_e:
            return 1
        return None

    def _check(self, v: Sequence) -> Vector:
        v = vector(v)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for algebra of dimension {self.dim}")
        return v

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x = self._check(x)
        y = self._check(y)
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure[i][j]

    def apply_alpha(self, v: Sequence, k: int = 1) -> Vector:
        return self.alpha_power(k) @ self._check(v)

    def alpha_power(self, k: int) -> Matrix:
        if k == 1:
            return self.alpha
        return self.alpha.power(k)

    def adjoint(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y]."""
        x = self._check(x)
        cols = [self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    @cached_property
    def basis_adjoints(self) -> tuple:
        return tuple(self.adjoint(unit_vector(self.dim, i)) for i in range(self.dim))

    @cached_property
    def basis_right_multiplications(self) -> tuple:
        """Matrices of y -> [y, e_i]."""
        n = self.dim
        return tuple(Matrix.from_columns([self.structure[j][i] for j in range(n)], n) for i in range(n))

    def ad_k(self, x: Sequence, k: int) -> Matrix:
        """Matrix of y -> [alpha^k(y), x]; defined only for alpha-fixed x."""
        x = self._check(x)
        if self.alpha @ x != x:
            raise NotAlphaFixed("ad_k needs alpha(x) == x")
        ak = self.alpha_power(k)
        cols = [self.bracket(ak.column(j), x) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def grading_automorphism(self) -> Matrix:
        """+1 on the even block, -1 on the odd block."""
        return Matrix.diag([ONE] * self.even_dim + [-ONE] * self.odd_dim)

    def supertrace(self, m: Matrix) -> Fraction:
        if (m.rows, m.cols) != (self.dim, self.dim):
            raise DimensionMismatch(f"expected a {self.dim}x{self.dim} matrix")
        return supertrace(m, self.even_dim)

    def derived_subalgebra(self) -> Subspace:
        n = self.dim
        return Subspace.span((self.structure[i][j] for i in range(n) for j in range(n)), n)

    def is_alpha_identity(self) -> bool:
        return self.alpha == Matrix.identity(self.dim)

    def alpha_fixed_space(self) -> Subspace:
        from .linalg import kernel

        return kernel(self.alpha - Matrix.identity(self.dim))

    def with_alpha(self, alpha: Matrix, name: str | None = None) -> "HomLieSuperAlgebra":
        return HomLieSuperAlgebra(
            name or self.name, self.even_dim, self.odd_dim, self.basis_names, self.structure, alpha
        )

    def with_name(self, name: str) -> "HomLieSuperAlgebra":
        return HomLieSuperAlgebra(name, self.even_dim, self.odd_dim, self.basis_names, self.structure, self.alpha)


def supertrace(m: Matrix, even_dim: int) -> Fraction:
    """Trace of gamma*m where gamma = diag(+1 on the first ``even_dim`` coordinates, -1 after)."""
    s = ZERO
    for i in range(m.rows):
        s += m[i, i] if i < even_dim else -m[i, i]
    return s


def is_degree_zero(m: Matrix, even_dim: int) -> bool:
    n = m.rows
    return all(m[i, j] == 0 for i in range(n) for j in range(n) if (i < even_dim) != (j < even_dim))


def super_commutator(a: Matrix, b: Matrix, even_dim: int) -> Matrix:
    """[A, B] = AB - (-1)^{|A||B|} BA for homogeneous A, B."""
    pa = _matrix_degree(a, even_dim)
    pb = _matrix_degree(b, even_dim)
    sign = -1 if pa and pb else 1
    return a @ b - (b @ a).scale(sign)


def _matrix_degree(m: Matrix, even_dim: int) -> int:
    n = m.rows
    even = all(m[i, j] == 0 for i in range(n) for j in range(n) if (i < even_dim) != (j < even_dim))
    if even:
        return 0
    odd = all(m[i, j] == 0 for i in range(n) for j in range(n) if (i < even_dim) == (j < even_dim))
    if odd:
        return 1
    raise ValueError("matrix is not homogeneous")


# --- axiom verification -----------------------------------------------------


def hom_jacobi_sum(A: HomLieSuperAlgebra, i: int, j: int, k: int) -> Vector:
    """Super Hom-Jacobi sum on basis vectors e_i, e_j, e_k."""
    p = A.parity
    alpha_cols = A.alpha.columns()
    br = A.structure
    out = A.bracket(alpha_cols[i], br[j][k])
    if p[i] and p[k]:
        out = tuple(-x for x in out)
    for (a, b, c, sgn) in ((j, k, i, -1 if p[j] and p[i] else 1), (k, i, j, -1 if p[k] and p[j] else 1)):
        t = A.bracket(alpha_cols[a], br[b][c])
        out = tuple(x + sgn * y for x, y in zip(out, t))
    return out


def check_skew(A: HomLieSuperAlgebra) -> tuple[bool, tuple | None]:
    n = A.dim
    p = A.parity
    for i, j in product(range(n), repeat=2):
        s = skew_sign(p[i], p[j])
        if tuple(s * c for c in A.structure[i][j]) != tuple(A.structure[j][i]):
            return False, (i, j)
    return True, None


def check_hom_jacobi(A: HomLieSuperAlgebra) -> tuple[bool, tuple | None]:
    """Verify the super Hom-Jacobi identity on all basis triples.

    Returns ``(True, None)`` or ``(False, (i, j, k))`` with the
    lexicographically first failing triple.
    """
    n = A.dim
    for i, j, k in product(range(n), repeat=3):
        if any(hom_jacobi_sum(A, i, j, k)):
            return False, (i, j, k)
    return True, None


def check_multiplicative(A: HomLieSuperAlgebra) -> tuple[bool, tuple | None]:
    n = A.dim
    cols = A.alpha.columns()
    for i, j in product(range(n), repeat=2):
        if A.alpha @ A.structure[i][j] != A.bracket(cols[i], cols[j]):
            return False, (i, j)
    return True, None


def check_regular(A: HomLieSuperAlgebra) -> bool:
    return inverse(A.alpha) is not None and check_multiplicative(A)[0]


@dataclass(frozen=True)
class VerificationReport:
    skew_ok: bool
    hom_jacobi_ok: bool
    hom_jacobi_witness: tuple | None
    multiplicative: bool
    multiplicative_witness: tuple | None
    regular: bool
    is_lie_superalgebra: bool

    @property
    def ok(self) -> bool:
        return self.skew_ok and self.hom_jacobi_ok


def verify(A: HomLieSuperAlgebra) -> VerificationReport:
    skew_ok, _ = check_skew(A)
    hj, hj_w = check_hom_jacobi(A)
    mult, mult_w = check_multiplicative(A)
    regular = mult and inverse(A.alpha) is not None
    lie = check_hom_jacobi(A.with_alpha(Matrix.identity(A.dim)))[0]
    return VerificationReport(skew_ok, hj, hj_w, mult, mult_w, regular, lie)


def yau_twist(A: HomLieSuperAlgebra, sigma: Matrix, name: str | None = None) -> HomLieSuperAlgebra:
    """Compose the bracket with a degree-zero automorphism ``sigma``.

    The result has bracket ``sigma o [.,.]`` and twisting map ``sigma o alpha``;
    ``sigma`` must commute with ``alpha``.
    """
    n = A.dim
    if (sigma.rows, sigma.cols) != (n, n):
        raise DimensionMismatch(f"sigma must be {n}x{n}")
    if not is_degree_zero(sigma, A.even_dim):
        raise NotAutomorphism("sigma does not preserve parity")
    if inverse(sigma) is None:
        raise NotAutomorphism("sigma is singular")
    cols = sigma.columns()
    for i, j in product(range(n), repeat=2):
        if sigma @ A.structure[i][j] != A.bracket(cols[i], cols[j]):
            raise NotAutomorphism(
                f"sigma([{A.basis_names[i]},{A.basis_names[j]}]) != [sigma({A.basis_names[i]}),"
                f" sigma({A.basis_names[j]})]"
            )
    if sigma @ A.alpha != A.alpha @ sigma:
        raise NotAutomorphism("sigma does not commute with alpha")
    if sigma == Matrix.identity(n):
        return A
    structure = tuple(tuple(sigma @ A.structure[i][j] for j in range(n)) for i in range(n))
    return HomLieSuperAlgebra(
        name or f"h{A.name}", A.even_dim, A.odd_dim, A.basis_names, structure, sigma @ A.alpha
    )


def abelian(k: int, odd: int = 0, name: str | None = None) -> HomLieSuperAlgebra:
    """Zero bracket, alpha = identity."""
    even = [f"a{i + 1}" for i in range(k)]
    odds = [f"b{i + 1}" for i in range(odd)]
    return HomLieSuperAlgebra.from_brackets(name or f"abelian_{k}", even, odds, {})
