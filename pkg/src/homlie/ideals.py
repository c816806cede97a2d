"""Ideal closures, simplicity, centers and the structural subspace identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Sequence

from .algebra import HomLieSuperAlgebra
from .linalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    kernel,
    subspace_intersect,
    unit_vector,
    vector,
)
from .spinning import MatrixModule, find_proper_submodule, minimal_submodule

Side = Literal["left", "right", "two"]


@dataclass(frozen=True)
class IdealSpec:
    side: Side = "two"
    graded: bool = True
    alpha_invariant: bool = False

    def __post_init__(self):
        if self.side not in ("left", "right", "two"):
            raise ValueError(f"side must be left, right or two, not {self.side!r}")


def right_multiplication(A: HomLieSuperAlgebra, i: int) -> Matrix:
    """Matrix of y -> [y, e_i]."""
    return A.basis_right_multiplications[i]


def closure_operators(A: HomLieSuperAlgebra, kind: IdealSpec) -> list[Matrix]:
    ops: list[Matrix] = []
    if kind.side in ("left", "two"):
        ops.extend(A.basis_adjoints)
    if kind.side in ("right", "two"):
        ops.extend(A.basis_right_multiplications)
    if kind.graded:
        ops.append(A.grading_automorphism())
    if kind.alpha_invariant:
        ops.append(A.alpha)
    return ops


def _spin_operators(A: HomLieSuperAlgebra, kind: IdealSpec) -> list[Matrix]:
    # On graded subspaces [y, e_i] = +-[e_i, y] componentwise, so one side plus
    # the grading already gives two-sided closure.
    if kind.graded and kind.side == "two":
        return closure_operators(A, IdealSpec("left", True, kind.alpha_invariant))
    return closure_operators(A, kind)


def ideal_module(A: HomLieSuperAlgebra, kind: IdealSpec = IdealSpec()) -> MatrixModule:
    """The algebra as a module over the closure operators; submodules are the ideals of type ``kind``."""
    return MatrixModule(A.dim, tuple(closure_operators(A, kind)))


@dataclass(frozen=True)
class IdealReport:
    generators: tuple
    closure: Subspace
    kind: IdealSpec
    closure_chain_length: int
    algebra: HomLieSuperAlgebra = field(repr=False, compare=False)

    def __post_init__(self):
        if self.closure.is_full():
            return
        for op in closure_operators(self.algebra, self.kind):
            if not self.closure.is_invariant_under(op):
                raise AssertionError("closure is not closed under the requested operations")
        if not all(self.closure.contains(g) for g in self.generators):
            raise AssertionError("closure does not contain its generators")


def ideal_closure(
    A: HomLieSuperAlgebra, seed: Sequence[Sequence], kind: IdealSpec = IdealSpec()
) -> IdealReport:
    """Smallest subspace containing ``seed`` closed under the operations in ``kind``.

    Spins in rounds; ``closure_chain_length`` counts the rounds that enlarged
    the subspace.
    """
    n = A.dim
    gens = tuple(vector(s) for s in seed)
    ops = _spin_operators(A, kind)
    ech = EchelonBasis(n)
    frontier: list[Vector] = [g for g in gens if ech.add(g)]
    rounds = 0
    while frontier and not ech.is_full:
        nxt: list[Vector] = []
        for v in frontier:
            for op in ops:
                w = op @ v
                if ech.add(w):
                    nxt.append(w)
        if nxt:
            rounds += 1
        frontier = nxt
    return IdealReport(gens, ech.to_subspace(), kind, rounds, A)


def closure(A: HomLieSuperAlgebra, seed: Sequence[Sequence], kind: IdealSpec = IdealSpec()) -> Subspace:
    return ideal_closure(A, seed, kind).closure


def is_ideal(A: HomLieSuperAlgebra, S: Subspace, kind: IdealSpec = IdealSpec()) -> bool:
    return all(S.is_invariant_under(op) for op in closure_operators(A, kind))


def homogeneous_seeds(A: HomLieSuperAlgebra, within: Subspace | None = None) -> list[Vector]:
    """Basis vectors and same-parity pairwise sums (of ``within``'s canonical basis if given)."""
    if within is None:
        base = [unit_vector(A.dim, i) for i in range(A.dim)]
    else:
        base = list(within.basis)
    seeds: list[Vector] = []
    for v in base:
        for part in A.parity_components(v):
            if any(part) and part not in seeds:
                seeds.append(part)
    singles = list(seeds)
    for u, w in combinations(singles, 2):
        if A.parity_of(u) == A.parity_of(w):
            seeds.append(add_vectors(u, w))
    return seeds


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    reason: str
    certificate: Subspace | None = None

    def __bool__(self) -> bool:
        return self.simple


def is_simple(A: HomLieSuperAlgebra, alpha_invariant: bool = False) -> SimplicityReport:
    """Decide whether A has no nontrivial graded ideals and [A, A] != 0.

    Spins every homogeneous basis vector first (cheap certificates), then runs
    the exact irreducibility test on the graded adjoint module.
    """
    n = A.dim
    if A.derived_subalgebra().is_zero():
        return SimplicityReport(False, "[g,g] = 0")
    kind = IdealSpec("two", True, alpha_invariant)
    proper = []
    for i in range(n):
        c = closure(A, [unit_vector(n, i)], kind)
        if not c.is_full():
            proper.append((c.dim, c.basis, i, c))
    if proper:
        _, _, i, c = min(proper, key=lambda t: t[:3])
        return SimplicityReport(False, f"closure of {A.basis_names[i]} is a proper graded ideal", c)
    sub = find_proper_submodule(ideal_module(A, kind))
    if sub is not None:
        return SimplicityReport(False, "proper graded ideal found by the irreducibility test", sub)
    return SimplicityReport(True, "no proper nonzero graded ideal")


def minimal_graded_ideals(A: HomLieSuperAlgebra, within: Subspace | None = None) -> list[Subspace]:
    """Minimal graded ideals reachable from the homogeneous seed family inside ``within``.

    ``within`` must itself be a graded ideal. Seed closures are refined by
    pairwise intersections, the minimal ones are descended to irreducible
    pieces, and the result is sorted by dimension, then by canonical basis.
    """
    n = A.dim
    V = within if within is not None else Subspace.full(n)
    if V.is_zero():
        return []
    found: set[Subspace] = {closure(A, [s]) for s in homogeneous_seeds(A, V)}
    changed = True
    while changed:
        changed = False
        for P, Q in combinations(sorted(found, key=_key), 2):
            C = subspace_intersect(P, Q)
            if not C.is_zero() and C not in found:
                found.add(C)
                changed = True
    candidates = [W for W in found if not any(U != W and U.is_subspace_of(W) for U in found)]
    M = ideal_module(A)
    return sorted({minimal_submodule(M, W) for W in candidates}, key=_key)


def _key(W: Subspace):
    return (W.dim, W.basis)


def center(A: HomLieSuperAlgebra) -> Subspace:
    """Center of the even part: {x even : [x, y] = 0 for all even y}."""
    n, e = A.dim, A.even_dim
    rows = []
    for j in range(e):
        for k in range(n):
            rows.append([A.structure[i][j][k] for i in range(e)])
    if not rows or e == 0:
        ker = Subspace.full(e)
    else:
        ker = kernel(Matrix.from_rows(rows, e))
    return Subspace.span((b + (0,) * A.odd_dim for b in ker.basis), n)


def bracket_span(A: HomLieSuperAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """span{[u, v] : u in U, v in V}."""
    return Subspace.span((A.bracket(u, v) for u in U.basis for v in V.basis), A.dim)


def annihilator(A: HomLieSuperAlgebra, V: Subspace) -> Subspace:
    """{a : [a, V] = 0}."""
    n = A.dim
    rows = []
    for v in V.basis:
        R = Matrix.from_columns([A.bracket(unit_vector(n, i), v) for i in range(n)], n)
        rows.extend(R.to_rows())
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix.from_rows(rows, n))


@dataclass(frozen=True)
class StructuralIdentities:
    applicable: bool
    even_odd: Subspace
    odd_odd: Subspace
    odd_annihilator: Subspace
    even_odd_is_odd: bool
    odd_odd_is_even: bool
    annihilator_is_zero: bool

    @property
    def all_hold(self) -> bool:
        return self.even_odd_is_odd and self.odd_odd_is_even and self.annihilator_is_zero


def check_structural_identities(A: HomLieSuperAlgebra) -> StructuralIdentities:
    g0, g1 = A.even_part(), A.odd_part()
    g01 = bracket_span(A, g0, g1)
    g11 = bracket_span(A, g1, g1)
    ann = annihilator(A, g1)
    return StructuralIdentities(
        applicable=A.odd_dim > 0,
        even_odd=g01,
        odd_odd=g11,
        odd_annihilator=ann,
        even_odd_is_odd=g01 == g1,
        odd_odd_is_even=g11 == g0,
        annihilator_is_zero=ann.is_zero(),
    )


def one_sided_ideal_search(A: HomLieSuperAlgebra, side: Side = "left") -> Subspace | None:
    """Look for a proper nonzero one-sided ideal among closures of e_i and e_i + e_j.

    This is a falsification search, not a decision procedure: non-graded
    one-sided ideals are not enumerable. The smallest witness is returned.
    """
    n = A.dim
    kind = IdealSpec(side, graded=False)
    seeds = [unit_vector(n, i) for i in range(n)]
    seeds += [add_vectors(seeds[i], seeds[j]) for i, j in combinations(range(n), 2)]
    witnesses = {c for c in (closure(A, [s], kind) for s in seeds) if not c.is_full() and not c.is_zero()}
    if not witnesses:
        return None
    return min(witnesses, key=lambda W: (W.dim, W.basis))
