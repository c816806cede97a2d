"""Bilinear forms on an algebra: invariance, parity, supersymmetry, radicals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .algebra import HomLieSuperAlgebra
from .linalg import (
    ZERO,
    EchelonBasis,
    Matrix,
    Scalar,
    Subspace,
    kernel,
    vector,
)

Parity = Literal["even", "odd", "mixed"]


def _parity_masks(G: Matrix, even_dim: int) -> tuple[bool, bool]:
    """(has even-block entries, has odd-block entries)."""
    has_even = has_odd = False
    for i in range(G.rows):
        for j in range(G.cols):
            if G[i, j]:
                if (i < even_dim) == (j < even_dim):
                    has_even = True
                else:
                    has_odd = True
    return has_even, has_odd


@dataclass(frozen=True)
class BilinearForm:
    """phi(x, y) = x^T G y over the algebra's fixed basis.

    ``parity`` is derived from the support of ``gram``: an even form lives on
    the (even, even) and (odd, odd) blocks, an odd form on the mixed blocks.
    The zero form counts as even.
    """

    gram: Matrix
    even_dim: int

    def __post_init__(self):
        if not self.gram.is_square:
            raise ValueError("gram matrix must be square")
        if not 0 <= self.even_dim <= self.gram.rows:
            raise ValueError("even_dim out of range")

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def parity(self) -> Parity:
        has_even, has_odd = _parity_masks(self.gram, self.even_dim)
        if has_even and has_odd:
            return "mixed"
        return "odd" if has_odd else "even"

    def is_zero(self) -> bool:
        return self.gram.is_zero()

    def __call__(self, x: Sequence, y: Sequence) -> Scalar:
        return evaluate(self, x, y)

    def split(self) -> tuple["BilinearForm", "BilinearForm"]:
        return form_parity_split(self)

    def restrict(self, W: Subspace) -> Matrix:
        """Gram matrix of phi on W in the coordinates of W's canonical basis."""
        B = Matrix.from_columns(list(W.basis), self.dim) if W.dim else Matrix.zeros(self.dim, 0)
        return B.T @ self.gram @ B

    def __str__(self) -> str:
        return f"{self.parity} form\n{self.gram}"


@dataclass(frozen=True)
class FormSpace:
    basis: tuple
    dimension: int

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return self.dimension

    def contains(self, phi: BilinearForm) -> bool:
        ech = EchelonBasis(phi.dim * phi.dim)
        for b in self.basis:
            ech.add(b.gram.flatten())
        return ech.contains(phi.gram.flatten())


def evaluate(phi: BilinearForm, x: Sequence, y: Sequence) -> Scalar:
    return sum((a * b for a, b in zip(vector(x), phi.gram @ vector(y))), ZERO)


def form_parity_split(phi: BilinearForm) -> tuple[BilinearForm, BilinearForm]:
    """(even part, odd part); their sum is phi."""
    n, e = phi.dim, phi.even_dim
    ev = [[ZERO] * n for _ in range(n)]
    od = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            target = ev if (i < e) == (j < e) else od
            target[i][j] = phi.gram[i, j]
    return BilinearForm(Matrix.from_rows(ev, n), e), BilinearForm(Matrix.from_rows(od, n), e)


def invariance_equations(A: HomLieSuperAlgebra):
    """Rows of phi([a,b],c) - phi(a,[b,c]) = 0 over all basis triples, in the unknowns G[p][q] -> p*n + q."""
    n = A.dim
    sp = A._sparse
    for a in range(n):
        for b in range(n):
            ab = sp[a][b]
            for c in range(n):
                row: dict[int, Scalar] = {}
                for k, coeff in ab:
                    idx = k * n + c
                    row[idx] = row.get(idx, ZERO) + coeff
                for k, coeff in sp[b][c]:
                    idx = a * n + k
                    row[idx] = row.get(idx, ZERO) - coeff
                row = {k: v for k, v in row.items() if v}
                if row:
                    yield row


def invariant_form_space(A: HomLieSuperAlgebra) -> FormSpace:
    """All invariant forms, with an rref-canonical basis of gram matrices.

    Every invariance equation only involves unknowns of one parity block, so
    the canonical basis is made of homogeneous forms.
    """
    n = A.dim
    ech = EchelonBasis(n * n)
    for row in invariance_equations(A):
        if ech.is_full:
            break
        ech.add(row)
    sol = ech.null_space()
    forms = tuple(BilinearForm(Matrix(n, n, v), A.even_dim) for v in sol.basis)
    return FormSpace(forms, len(forms))


def killing_form(A: HomLieSuperAlgebra) -> BilinearForm:
    """K(x, y) = str(ad x ad y)."""
    n = A.dim
    ads = A.basis_adjoints
    rows = [[A.supertrace(ads[i] @ ads[j]) for j in range(n)] for i in range(n)]
    return BilinearForm(Matrix.from_rows(rows, n), A.even_dim)


def twisted_killing_form(A: HomLieSuperAlgebra) -> BilinearForm:
    """K_alpha(x, y) = str(ad(alpha x) ad y). Experimental; not used by any criterion."""
    n = A.dim
    ads = A.basis_adjoints
    twisted = [A.adjoint(A.alpha.column(i)) for i in range(n)]
    rows = [[A.supertrace(twisted[i] @ ads[j]) for j in range(n)] for i in range(n)]
    return BilinearForm(Matrix.from_rows(rows, n), A.even_dim)


def is_invariant(A: HomLieSuperAlgebra, phi: BilinearForm) -> tuple[bool, tuple | None]:
    """Check phi([a,b],c) = phi(a,[b,c]) on basis triples; the witness is the first failing (a, b, c)."""
    n = A.dim
    G = phi.gram
    for a in range(n):
        for b in range(n):
            ab = A.structure[a][b]
            for c in range(n):
                bc = A.structure[b][c]
                lhs = sum((ab[k] * G[k, c] for k in range(n) if ab[k]), ZERO)
                rhs = sum((G[a, k] * bc[k] for k in range(n) if bc[k]), ZERO)
                if lhs != rhs:
                    return False, (a, b, c)
    return True, None


def is_supersymmetric(A: HomLieSuperAlgebra, phi: BilinearForm) -> bool:
    p = A.parity
    G = phi.gram
    n = A.dim
    return all(
        G[i, j] == (-G[j, i] if p[i] and p[j] else G[j, i]) for i in range(n) for j in range(i, n)
    )


def radical(A: HomLieSuperAlgebra, phi: BilinearForm) -> Subspace:
    """{y : phi(x, y) = 0 for all x}."""
    return kernel(phi.gram)


def left_radical(A: HomLieSuperAlgebra, phi: BilinearForm) -> Subspace:
    return kernel(phi.gram.T)


def is_nondegenerate(A: HomLieSuperAlgebra, phi: BilinearForm) -> bool:
    return radical(A, phi).is_zero()


def orthogonal_complement(A: HomLieSuperAlgebra, phi: BilinearForm, S: Subspace) -> Subspace:
    """{a : phi(a, s) = 0 for all s in S}."""
    n = A.dim
    if S.is_zero():
        return Subspace.full(n)
    rows = [phi.gram @ s for s in S.basis]
    return kernel(Matrix.from_rows(rows, n))
