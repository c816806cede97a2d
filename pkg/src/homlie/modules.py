"""The even part acting on the odd part (and on itself): submodules, complete
reducibility, classicality and the center-eigenvalue statement."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import HomLieSuperAlgebra
from .ideals import bracket_span, center, is_simple
from .linalg import (
    ZERO,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    combine,
    scale_vector,
    solve_sparse,
)
from .spinning import (
    MatrixModule,
    invariant_complement,
    restrict,
    semisimple_decomposition,
    spin,
)
from .spinning import minimal_submodules as _minimal_submodules


class HypothesisNotMet(ValueError):
    """The preconditions of a theorem-level check do not hold."""


@dataclass(frozen=True)
class G0Module:
    """A module over the even part, living inside a subspace of the algebra.

    ``action`` holds one matrix per acting vector, written in the coordinates
    of ``module_space``'s canonical basis. Subspaces handed in and out are in
    ambient coordinates.
    """

    algebra: HomLieSuperAlgebra | None
    module_space: Subspace
    action: tuple

    @property
    def dim(self) -> int:
        return self.module_space.dim

    @property
    def matrix_module(self) -> MatrixModule:
        return MatrixModule(self.dim, self.action)

    @property
    def ambient_dim(self) -> int:
        return self.module_space.ambient_dim

    def to_local(self, v: Sequence) -> Vector:
        c = self.module_space.coordinates(v)
        if c is None:
            raise ValueError("vector is outside the module space")
        return c

    def to_ambient(self, local: Subspace) -> Subspace:
        n = self.ambient_dim
        return Subspace.span((combine(v, self.module_space.basis, n) for v in local.basis), n)

    def to_local_subspace(self, W: Subspace) -> Subspace:
        return Subspace.span((self.to_local(b) for b in W.basis), self.dim)


def _action_on(A: HomLieSuperAlgebra, acting: Sequence[int], space: Subspace) -> G0Module:
    mats = restrict(MatrixModule(A.dim, tuple(A.basis_adjoints[i] for i in acting)), space).generators
    return G0Module(A, space, mats)


def odd_module(A: HomLieSuperAlgebra) -> G0Module:
    """The odd part as a module over the even part."""
    return _action_on(A, range(A.even_dim), A.odd_part())


def even_adjoint_module(A: HomLieSuperAlgebra) -> G0Module:
    """The even part as a module over itself."""
    return _action_on(A, range(A.even_dim), A.even_part())


def module_from_matrices(matrices: Sequence[Matrix]) -> G0Module:
    """An abstract module given by its action matrices."""
    mats = tuple(matrices)
    if not mats:
        raise ValueError("need at least one matrix (use a zero matrix for the trivial action)")
    m = mats[0].rows
    return G0Module(None, Subspace.full(m), mats)


def spin_submodule(M: G0Module, seed: Sequence) -> Subspace:
    return M.to_ambient(spin(M.matrix_module, [M.to_local(seed)]))


def minimal_submodules(M: G0Module) -> list[Subspace]:
    return [M.to_ambient(W) for W in _minimal_submodules(M.matrix_module)]


@dataclass(frozen=True)
class Reducibility:
    completely_reducible: bool
    summands: tuple

    def __bool__(self) -> bool:
        return self.completely_reducible


def is_completely_reducible(M: G0Module) -> Reducibility:
    """Irreducible summands summing to M, when they exist."""
    parts = semisimple_decomposition(M.matrix_module)
    if parts is None:
        return Reducibility(False, ())
    return Reducibility(True, tuple(M.to_ambient(W) for W in parts))


def has_invariant_complement(M: G0Module, W: Subspace) -> bool:
    return invariant_complement(M.matrix_module, M.to_local_subspace(W)) is not None


def is_classical(A: HomLieSuperAlgebra) -> bool:
    return bool(is_simple(A)) and bool(is_completely_reducible(odd_module(A)))


def is_reductive_even_part(A: HomLieSuperAlgebra) -> bool:
    if A.even_dim == 0:
        return True
    return bool(is_completely_reducible(even_adjoint_module(A)))


@dataclass(frozen=True)
class ComponentReport:
    applicable: bool
    components: tuple
    count: int
    count_ok: bool
    # Only meaningful for two components.
    first_square_zero: bool | None = None
    second_square_zero: bool | None = None
    cross_is_even_part: bool | None = None

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return True
        if not self.count_ok:
            return False
        if self.count == 2:
            return bool(self.first_square_zero and self.second_square_zero and self.cross_is_even_part)
        return True


def irreducible_component_count_check(A: HomLieSuperAlgebra) -> ComponentReport:
    if A.odd_dim == 0 or not is_simple(A):
        return ComponentReport(False, (), 0, True)
    red = is_completely_reducible(odd_module(A))
    if not red:
        return ComponentReport(False, (), 0, True)
    comps = red.summands
    count = len(comps)
    if count != 2:
        return ComponentReport(True, comps, count, count in (1, 2))
    g1, g2 = comps
    return ComponentReport(
        True,
        comps,
        count,
        True,
        bracket_span(A, g1, g1).is_zero(),
        bracket_span(A, g2, g2).is_zero(),
        bracket_span(A, g1, g2) == A.even_part(),
    )


@dataclass(frozen=True)
class CenterEigenResult:
    element: Vector
    components: tuple  # (component acted on by -1, component acted on by +1)
    eigenvalues: tuple  # (-1, 1), confirmed by direct evaluation
    center_dim: int

    @property
    def center_is_one_dimensional(self) -> bool:
        return self.center_dim == 1


def _eigen_solve(A: HomLieSuperAlgebra, Z: Subspace, comps: Sequence[Subspace], values: Sequence[int]):
    """Find c in Z with [c, x] = values[r] x for every x in comps[r]."""
    n = A.dim
    k = Z.dim
    eqs = []
    for comp, lam in zip(comps, values):
        for x in comp.basis:
            images = [A.bracket(z, x) for z in Z.basis]
            for row in range(n):
                eq = {t: images[t][row] for t in range(k) if images[t][row]}
                eqs.append((eq, lam * x[row]))
    sol = solve_sparse(eqs, k)
    if sol is None:
        return None
    return combine(sol, Z.basis, n)


def _acts_by_scalar(A: HomLieSuperAlgebra, c: Vector, comp: Subspace) -> Scalar | None:
    lam = None
    for x in comp.basis:
        y = A.bracket(c, x)
        piv = next(i for i, v in enumerate(x) if v)
        mu = y[piv] / x[piv]
        if y != scale_vector(mu, x):
            return None
        if lam is not None and mu != lam:
            return None
        lam = mu
    return lam


def center_eigen_element(A: HomLieSuperAlgebra) -> CenterEigenResult:
    """An element of the even center acting by -1 and +1 on the two odd components.

    Raises HypothesisNotMet unless A is classical with a nonzero even center
    and an odd part splitting into exactly two irreducible components.
    """
    if not is_simple(A):
        raise HypothesisNotMet("algebra is not simple")
    red = is_completely_reducible(odd_module(A))
    if not red:
        raise HypothesisNotMet("odd part is not completely reducible")
    Z = center(A)
    if Z.is_zero():
        raise HypothesisNotMet("center of the even part is zero")
    comps = red.summands
    if len(comps) != 2:
        raise HypothesisNotMet(f"odd part has {len(comps)} irreducible components, not 2")
    for order in (comps, comps[::-1]):
        c = _eigen_solve(A, Z, order, (-1, 1))
        if c is not None:
            lams = tuple(_acts_by_scalar(A, c, W) for W in order)
            return CenterEigenResult(c, tuple(order), lams, Z.dim)
    raise HypothesisNotMet("no central element acts by -1 and +1 on the odd components")


def supertrace_zero_check(A: HomLieSuperAlgebra) -> bool:
    """str(ad e_i) = 0 for every basis vector."""
    return all(A.supertrace(ad) == ZERO for ad in A.basis_adjoints)


def hom_supertrace_zero_check(A: HomLieSuperAlgebra) -> bool:
    """str(ad(e_i) alpha) = 0 for every basis vector."""
    return all(A.supertrace(ad @ A.alpha) == ZERO for ad in A.basis_adjoints)
