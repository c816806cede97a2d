"""Submodules of a vector space acted on by a finite set of matrices.

A :class:`MatrixModule` is Q^m together with generator matrices; a subspace is
a submodule when every generator maps it into itself. Proper submodules are
found by spinning seed vectors and, when seeds are not enough, by a Norton
irreducibility test (the "meataxe"): pick a random element ``a`` of the
enveloping algebra, an irreducible factor ``p`` of its characteristic
polynomial with ``dim ker p(a) == deg p``, and spin one vector of ``ker p(a)``
and one vector of ``ker p(a)^T``. If both spins are everything, the module is
irreducible.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .linalg import (
    ZERO,
    EchelonBasis,
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    combine,
    kernel,
    solve_sparse,
    subspace_intersect,
    sum_of,
    unit_vector,
    vector,
)

MEATAXE_TRIES = 24


@dataclass(frozen=True)
class MatrixModule:
    dim: int
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            if (g.rows, g.cols) != (self.dim, self.dim):
                raise ValueError("generator shape does not match module dimension")

    def is_submodule(self, W: Subspace) -> bool:
        return all(W.is_invariant_under(g) for g in self.generators)

    def transpose(self) -> "MatrixModule":
        return MatrixModule(self.dim, tuple(g.T for g in self.generators))


def spin(M: MatrixModule, seeds: Sequence[Sequence]) -> Subspace:
    """Smallest submodule containing ``seeds``."""
    ech = EchelonBasis(M.dim)
    queue: list[Vector] = []
    for s in seeds:
        s = vector(s)
        if ech.add(s):
            queue.append(s)
    while queue and not ech.is_full:
        v = queue.pop()
        for g in M.generators:
            w = g @ v
            if ech.add(w):
                queue.append(w)
    return ech.to_subspace()


def restrict(M: MatrixModule, W: Subspace) -> MatrixModule:
    """Action on a submodule, in the coordinates of W's canonical basis."""
    gens = []
    for g in M.generators:
        cols = []
        for b in W.basis:
            c = W.coordinates(g @ b)
            if c is None:
                raise ValueError("subspace is not invariant")
            cols.append(c)
        gens.append(Matrix.from_columns(cols, W.dim) if W.dim else Matrix.zeros(0))
    return MatrixModule(W.dim, tuple(gens))


def embed(W: Subspace, inner: Subspace) -> Subspace:
    """Map a subspace given in W-coordinates back to the ambient space."""
    n = W.ambient_dim
    return Subspace.span((combine(v, W.basis, n) for v in inner.basis), n)


def _charpoly_factors(a: Matrix) -> list[tuple[list[Fraction], int]]:
    sm = sympy.Matrix(a.rows, a.cols, [sympy.Rational(x.numerator, x.denominator) for x in a.entries])
    lam = sympy.Symbol("lam")
    poly = sm.charpoly(lam)
    _, factors = sympy.factor_list(poly.as_expr(), lam)
    out = []
    for f, mult in factors:
        coeffs = sympy.Poly(f, lam).all_coeffs()
        out.append(([Fraction(int(c.p), int(c.q)) for c in coeffs], mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def _poly_at(coeffs: list[Fraction], a: Matrix) -> Matrix:
    """Evaluate a polynomial (leading coefficient first) at a square matrix."""
    n = a.rows
    result = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in coeffs:
        result = result @ a + ident.scale(c)
    return result


def _random_element(M: MatrixModule, rng: random.Random) -> Matrix:
    gens = list(M.generators)
    a = Matrix.zeros(M.dim)
    for g in gens:
        a = a + g.scale(rng.randint(-3, 3))
    for _ in range(min(3, len(gens))):
        g, h = rng.choice(gens), rng.choice(gens)
        a = a + (g @ h).scale(rng.randint(-2, 2))
    return a


def find_proper_submodule(M: MatrixModule, seed: int = 0) -> Subspace | None:
    """A proper nonzero submodule, or None when M is irreducible."""
    m = M.dim
    if m <= 1:
        return None
    for i in range(m):
        W = spin(M, [unit_vector(m, i)])
        if not W.is_full():
            return W
    MT = M.transpose()
    rng = random.Random(seed)
    for _ in range(MEATAXE_TRIES):
        a = _random_element(M, rng)
        for coeffs, _mult in _charpoly_factors(a):
            deg = len(coeffs) - 1
            pa = _poly_at(coeffs, a)
            N = kernel(pa)
            if N.dim != deg:
                continue
            W = spin(M, [N.basis[0]])
            if not W.is_full():
                return W
            NT = kernel(pa.T)
            U = spin(MT, [NT.basis[0]])
            if not U.is_full():
                return U.annihilator()
            return None
    # Norton's criterion never became applicable: fall back to a seed grid.
    for u, v in combinations(range(m), 2):
        for c in (2, -1, Fraction(1, 2), 3):
            s = list(unit_vector(m, u))
            s[v] = Fraction(c)
            W = spin(M, [s])
            if not W.is_full():
                return W
    warnings.warn("irreducibility test inconclusive; treating module as irreducible", RuntimeWarning)
    return None


def is_irreducible(M: MatrixModule) -> bool:
    return M.dim > 0 and find_proper_submodule(M) is None


def minimal_submodule(M: MatrixModule, within: Subspace | None = None) -> Subspace:
    """A minimal nonzero submodule contained in ``within`` (default: everything)."""
    W = within if within is not None else Subspace.full(M.dim)
    if W.is_zero():
        raise ValueError("no nonzero submodule inside the zero space")
    while True:
        sub = find_proper_submodule(restrict(M, W))
        if sub is None:
            return W
        W = embed(W, sub)


def _sort_key(W: Subspace):
    return (W.dim, W.basis)


def minimal_submodules(M: MatrixModule) -> list[Subspace]:
    """Minimal submodules reachable from the seed family.

    Seeds are basis vectors and pairwise sums; their spins are refined by
    pairwise intersections until stable, and every minimal candidate is
    confirmed irreducible (or descended to an irreducible piece).
    """
    m = M.dim
    if m == 0:
        return []
    seeds = [unit_vector(m, i) for i in range(m)]
    seeds += [add_vectors(seeds[i], seeds[j]) for i, j in combinations(range(m), 2)]
    found: set[Subspace] = set()
    for s in seeds:
        found.add(spin(M, [s]))
    changed = True
    while changed:
        changed = False
        for A, B in combinations(sorted(found, key=_sort_key), 2):
            C = subspace_intersect(A, B)
            if not C.is_zero() and C not in found:
                found.add(C)
                changed = True
    candidates = [W for W in found if not any(V != W and V.is_subspace_of(W) for V in found)]
    result: set[Subspace] = set()
    for W in candidates:
        result.add(minimal_submodule(M, W))
    return sorted(result, key=_sort_key)


def invariant_complement(M: MatrixModule, W: Subspace) -> Subspace | None:
    """A submodule C with W + C = everything and W & C = 0, or None if none exists.

    Solves for Q (dim W x m) with Q B = I and Q g = g_W Q for every generator g,
    where B holds W's basis as columns; then C = ker(B Q).
    """
    m = M.dim
    w = W.dim
    if w == 0:
        return Subspace.full(m)
    if w == m:
        return Subspace.zero(m)
    rW = restrict(M, W)
    nvars = w * m

    def var(r: int, c: int) -> int:
        return r * m + c

    eqs = []
    for r in range(w):
        for s in range(w):
            row = {var(r, c): W.basis[s][c] for c in range(m) if W.basis[s][c]}
            eqs.append((row, 1 if r == s else 0))
    for g, gw in zip(M.generators, rW.generators):
        for r in range(w):
            for c in range(m):
                row: dict[int, Fraction] = {}
                # (Q g)[r, c] = sum_k Q[r, k] g[k, c]
                for k in range(m):
                    if g[k, c]:
                        row[var(r, k)] = row.get(var(r, k), ZERO) + g[k, c]
                # (g_W Q)[r, c] = sum_t g_W[r, t] Q[t, c]
                for t in range(w):
                    if gw[r, t]:
                        row[var(t, c)] = row.get(var(t, c), ZERO) - gw[r, t]
                eqs.append((row, 0))
    sol = solve_sparse(eqs, nvars)
    if sol is None:
        return None
    Q = Matrix(w, m, sol)
    B = Matrix.from_columns(list(W.basis), m)
    return kernel(B @ Q)


def semisimple_decomposition(M: MatrixModule) -> list[Subspace] | None:
    """Irreducible summands whose direct sum is M, or None if M is not completely reducible."""
    m = M.dim
    if m == 0:
        return []
    mins = minimal_submodules(M)
    picked: list[Subspace] = []
    total = Subspace.zero(m)
    for W in mins:
        if subspace_intersect(W, total).is_zero():
            picked.append(W)
            total = sum_of(picked, m)
    if total.is_full():
        return picked
    W = mins[0] if mins else minimal_submodule(M)
    C = invariant_complement(M, W)
    if C is None:
        return None
    rest = semisimple_decomposition(restrict(M, C))
    if rest is None:
        return None
    return [W] + [embed(C, R) for R in rest]
