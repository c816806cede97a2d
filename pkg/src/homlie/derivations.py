"""alpha^k-derivations as solutions of a homogeneous linear system.

A degree-d linear map D is an alpha^k-derivation when D alpha = alpha D and

    D([x, y]) = [D x, alpha^k y] + (-1)^(d|x|) [alpha^k x, D y].

Inner ones are y -> [alpha^(k-1) y, x] for alpha-fixed x.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .algebra import HomLieSuperAlgebra, check_multiplicative, check_regular
from .forms import is_nondegenerate, killing_form
from .linalg import ZERO, EchelonBasis, Matrix, Subspace, subspace_sum, vector
from .modules import HypothesisNotMet


class NegativePowerNonRegular(ValueError):
    """A negative power of alpha was requested but alpha is not invertible."""


class NonMultiplicativeWarning(UserWarning):
    pass


def _alpha_power(A: HomLieSuperAlgebra, k: int) -> Matrix:
    if k < 0 and not check_regular(A):
        raise NegativePowerNonRegular(f"alpha^{k} needs a regular algebra")
    return A.alpha_power(k)


def _degree_ok(A: HomLieSuperAlgebra, r: int, c: int, parity: int) -> bool:
    return (A.parity[r] + A.parity[c]) % 2 == parity


def derivation_equations(A: HomLieSuperAlgebra, k: int, parity: int):
    """Constraint rows in the unknowns D[r][c] -> r*n + c (all n^2 of them)."""
    n = A.dim
    al = A.alpha
    ak = _alpha_power(A, k)
    akcols = [ak.column(j) for j in range(n)]
    # P[r][j] = [e_r, alpha^k e_j], Q[i][s] = [alpha^k e_i, e_s]
    P = [[A.bracket(A.basis_vector(r), akcols[j]) for j in range(n)] for r in range(n)]
    Q = [[A.bracket(akcols[i], A.basis_vector(s)) for s in range(n)] for i in range(n)]

    def add(row, idx, val):
        v = row.get(idx, ZERO) + val
        if v:
            row[idx] = v
        else:
            row.pop(idx, None)

    for r in range(n):
        for c in range(n):
            row: dict = {}
            for m in range(n):
                if al[m, c]:
                    add(row, r * n + m, al[m, c])
                if al[r, m]:
                    add(row, m * n + c, -al[r, m])
            if row:
                yield row
    for i in range(n):
        sign = -1 if parity and A.parity[i] else 1
        for j in range(n):
            cij = A.structure[i][j]
            for t in range(n):
                row = {}
                for m in range(n):
                    if cij[m]:
                        add(row, t * n + m, cij[m])
                for rr in range(n):
                    if P[rr][j][t]:
                        add(row, rr * n + i, -P[rr][j][t])
                for s in range(n):
                    if Q[i][s][t]:
                        add(row, s * n + j, -sign * Q[i][s][t])
                if row:
                    yield row


def is_derivation(A: HomLieSuperAlgebra, D: Matrix, k: int, parity: int) -> tuple[bool, tuple | None]:
    """Check degree, commutation with alpha and the twisted Leibniz rule on basis pairs."""
    n = A.dim
    for r in range(n):
        for c in range(n):
            if D[r, c] and not _degree_ok(A, r, c, parity):
                return False, ("degree", r, c)
    if D @ A.alpha != A.alpha @ D:
        return False, ("alpha",)
    ak = _alpha_power(A, k)
    for i in range(n):
        sign = -1 if parity and A.parity[i] else 1
        ei = A.basis_vector(i)
        for j in range(n):
            ej = A.basis_vector(j)
            lhs = D @ A.structure[i][j]
            a = A.bracket(D @ ei, ak @ ej)
            b = A.bracket(ak @ ei, D @ ej)
            if lhs != tuple(x + sign * y for x, y in zip(a, b)):
                return False, ("leibniz", i, j)
    return True, None


def inner_derivation_matrices(A: HomLieSuperAlgebra, k: int, parity: int | None = None) -> list[Matrix]:
    """y -> [alpha^(k-1) y, x] over the canonical basis of the alpha-fixed space."""
    if k - 1 < 0 and not check_regular(A):
        raise NegativePowerNonRegular(f"inner alpha^{k}-derivations need alpha^{k - 1}")
    out = []
    for x in A.alpha_fixed_space().basis:
        if parity is not None and A.parity_of(x) != parity:
            continue
        out.append(A.ad_k(x, k - 1))
    return out


def inner_derivations(A: HomLieSuperAlgebra, k: int, parity: int | None = None) -> Subspace:
    """Inner alpha^k-derivations as a subspace of the flattened n^2 matrix space."""
    n = A.dim
    return Subspace.span((m.flatten() for m in inner_derivation_matrices(A, k, parity)), n * n)


@dataclass(frozen=True)
class DerivationSpace:
    algebra: HomLieSuperAlgebra
    k: int
    parity: int
    basis: tuple
    inner_subspace: Subspace | None
    multiplicative: bool

    def __post_init__(self):
        for D in self.basis:
            ok, where = is_derivation(self.algebra, D, self.k, self.parity)
            if not ok:
                raise AssertionError(f"basis matrix fails the derivation identities at {where}")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def span(self) -> Subspace:
        n = self.algebra.dim
        return Subspace.span((D.flatten() for D in self.basis), n * n)

    @property
    def inner_contained(self) -> bool | None:
        if self.inner_subspace is None:
            return None
        return self.inner_subspace.is_subspace_of(self.span())

    @property
    def all_inner(self) -> bool | None:
        if self.inner_subspace is None:
            return None
        return self.span().is_subspace_of(self.inner_subspace)


def derivation_space(A: HomLieSuperAlgebra, k: int, parity: int = 0) -> DerivationSpace:
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    n = A.dim
    mult, _ = check_multiplicative(A)
    if not mult:
        warnings.warn(f"{A.name} is not multiplicative", NonMultiplicativeWarning, stacklevel=2)
    allowed = [r * n + c for r in range(n) for c in range(n) if _degree_ok(A, r, c, parity)]
    local = {g: i for i, g in enumerate(allowed)}
    ech = EchelonBasis(len(allowed))
    for row in derivation_equations(A, k, parity):
        if ech.is_full:
            break
        ech.add({local[g]: v for g, v in row.items() if g in local})
    basis = []
    for v in ech.null_space().basis:
        full = [ZERO] * (n * n)
        for i, g in enumerate(allowed):
            full[g] = v[i]
        basis.append(Matrix(n, n, tuple(full)))
    try:
        inner = inner_derivations(A, k, parity)
    except NegativePowerNonRegular:
        inner = None
    return DerivationSpace(A, k, parity, tuple(basis), inner, mult)


def check_inner_when_killing_nondegenerate(A: HomLieSuperAlgebra, k: int) -> bool:
    """Every even and odd alpha^k-derivation is inner."""
    if not is_nondegenerate(A, killing_form(A)):
        raise HypothesisNotMet("Killing form is degenerate")
    der = subspace_sum(derivation_space(A, k, 0).span(), derivation_space(A, k, 1).span())
    return der.is_subspace_of(inner_derivations(A, k))


def check_ad_is_derivation(A: HomLieSuperAlgebra, x: Sequence, k: int) -> bool:
    """y -> [alpha^k y, x] lies in the alpha^(k+1)-derivations of the parity of x."""
    x = vector(x)
    p = A.parity_of(x)
    if p is None:
        raise ValueError("x must be homogeneous and nonzero")
    ok, _ = is_derivation(A, A.ad_k(x, k), k + 1, p)
    return ok
