"""Direct sums, orthogonal decomposition into minimal graded ideals, and the
Killing-form criterion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import HomLieSuperAlgebra
from .forms import (
    BilinearForm,
    is_invariant,
    is_nondegenerate,
    killing_form,
    orthogonal_complement,
    radical,
)
from .ideals import (
    IdealSpec,
    bracket_span,
    closure,
    is_ideal,
    is_simple,
    minimal_graded_ideals,
)
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    add_vectors,
    is_direct_sum,
    kernel,
    solve,
    subspace_intersect,
    subspace_sum,
    sum_of,
    unit_vector,
)
from .modules import is_classical, is_reductive_even_part


class DecompositionError(ValueError):
    pass


class DegenerateForm(DecompositionError):
    pass


class NotInvariant(DecompositionError):
    pass


class NotHomogeneous(DecompositionError):
    pass


class CommutativeIdealPresent(DecompositionError):
    def __init__(self, witness: Subspace):
        self.witness = witness
        super().__init__(f"commutative graded ideal of dimension {witness.dim}")


def direct_sum(parts: Sequence[HomLieSuperAlgebra], name: str | None = None) -> HomLieSuperAlgebra:
    """Block-diagonal sum; basis is all even vectors of all parts, then all odd ones.

    Basis names become ``<name>_<k>`` with k the 1-based position of the part.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    if len(parts) == 1 and name is None:
        return parts[0]
    index: list[tuple[int, int]] = []  # new position -> (part, old position)
    for p, P in enumerate(parts):
        index += [(p, i) for i in range(P.even_dim)]
    for p, P in enumerate(parts):
        index += [(p, i) for i in range(P.even_dim, P.dim)]
    pos = {pi: k for k, pi in enumerate(index)}
    n = len(index)
    names = tuple(f"{parts[p].basis_names[i]}_{p + 1}" for p, i in index)
    structure = []
    alpha = [[ZERO] * n for _ in range(n)]
    for a, (p, i) in enumerate(index):
        P = parts[p]
        row = []
        for b, (q, j) in enumerate(index):
            v = [ZERO] * n
            if p == q:
                for m, c in enumerate(P.structure[i][j]):
                    if c:
                        v[pos[(p, m)]] = c
            row.append(tuple(v))
        structure.append(tuple(row))
        for m in range(P.dim):
            alpha[a][pos[(p, m)]] = P.alpha[i, m]
    return HomLieSuperAlgebra(
        name or "+".join(P.name for P in parts),
        sum(P.even_dim for P in parts),
        sum(P.odd_dim for P in parts),
        names,
        tuple(structure),
        Matrix.from_rows(alpha, n),
    )


def block_subspaces(parts: Sequence[HomLieSuperAlgebra]) -> list[Subspace]:
    """Where each part of ``direct_sum(parts)`` sits, in the order of ``parts``."""
    n = sum(P.dim for P in parts)
    e_total = sum(P.even_dim for P in parts)
    out = []
    e_off = 0
    o_off = e_total
    for P in parts:
        idx = list(range(e_off, e_off + P.even_dim)) + list(range(o_off, o_off + P.odd_dim))
        out.append(Subspace.span((unit_vector(n, i) for i in idx), n))
        e_off += P.even_dim
        o_off += P.odd_dim
    return out


def _full_center(A: HomLieSuperAlgebra) -> Subspace:
    n = A.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([A.structure[i][j][k] for i in range(n)])
    return kernel(Matrix.from_rows(rows, n)) if rows else Subspace.full(n)


def has_commutative_graded_ideal(A: HomLieSuperAlgebra) -> Subspace | None:
    """A nonzero graded ideal I with [I, I] = 0, or None.

    Every such ideal contains a minimal graded ideal, which is then also
    commutative, so it is enough to look at the minimal ideals reachable from
    the seed family, plus the (graded) center as a cross-check.
    """
    candidates = list(minimal_graded_ideals(A))
    Z = _full_center(A)
    if not Z.is_zero():
        candidates.append(Z)
    hits = {I for I in candidates if not I.is_zero() and bracket_span(A, I, I).is_zero()}
    if not hits:
        return None
    return min(hits, key=lambda W: (W.dim, W.basis))


def _is_coordinate_block(W: Subspace) -> list[int] | None:
    idx = []
    for b in W.basis:
        nz = [i for i, x in enumerate(b) if x]
        if len(nz) != 1 or b[nz[0]] != 1:
            return None
        idx.append(nz[0])
    return idx


def induced_algebra(
    A: HomLieSuperAlgebra, W: Subspace, complement: Subspace | None = None, name: str | None = None
) -> tuple[HomLieSuperAlgebra, bool]:
    """The algebra structure on a graded ideal W, in W's canonical basis.

    Returns (algebra, alpha_invariant). When W is not alpha-invariant, alpha
    is projected onto W along ``complement``.
    """
    n = A.dim
    basis = W.basis
    par = [A.parity_of(b) for b in basis]
    if None in par or par != sorted(par):
        raise NotHomogeneous("ideal basis is not homogeneous")
    e = par.count(0)
    idx = _is_coordinate_block(W)
    if idx is not None:
        names = tuple(A.basis_names[i] for i in idx)
    else:
        names = tuple(f"w{i}" for i in range(W.dim))
    structure = []
    for u in basis:
        row = []
        for v in basis:
            c = W.coordinates(A.bracket(u, v))
            if c is None:
                raise DecompositionError("subspace is not closed under the bracket")
            row.append(c)
        structure.append(tuple(row))
    alpha_invariant = W.is_invariant_under(A.alpha)
    cols = []
    if alpha_invariant:
        cols = [W.coordinates(A.alpha @ b) for b in basis]
    else:
        if complement is None:
            raise DecompositionError("alpha does not preserve the ideal and no complement was given")
        full = list(basis) + list(complement.basis)
        M = Matrix.from_columns(full, n)
        for b in basis:
            coords = solve(M, A.alpha @ b)
            cols.append(tuple(coords[: W.dim]))
    alpha = Matrix.from_columns(cols, W.dim) if W.dim else Matrix.zeros(0)
    B = HomLieSuperAlgebra(name or A.name, e, W.dim - e, names, tuple(structure), alpha)
    return B, alpha_invariant


@dataclass(frozen=True)
class Summand:
    subspace: Subspace
    algebra: HomLieSuperAlgebra
    alpha_invariant: bool
    restricted_form: Matrix


@dataclass(frozen=True)
class Decomposition:
    summands: tuple
    pairwise_orthogonal: bool
    pairwise_bracket_zero: bool
    form_used: BilinearForm
    form_invariant: bool
    steps: tuple = field(default=(), repr=False)

    @property
    def subspaces(self) -> list[Subspace]:
        return [s.subspace for s in self.summands]

    def __len__(self) -> int:
        return len(self.summands)


def _certify_split(A: HomLieSuperAlgebra, current: Subspace, J: Subspace, Jp: Subspace) -> str | None:
    """None when current = J + Jp directly, Jp is an ideal and [J, Jp] = 0; else the failure."""
    if not subspace_intersect(J, Jp).is_zero():
        return "J meets its orthogonal complement"
    if subspace_sum(J, Jp) != current:
        return "J and its orthogonal complement do not span"
    if not is_ideal(A, Jp, IdealSpec()):
        return "orthogonal complement is not a graded ideal"
    if not bracket_span(A, J, Jp).is_zero():
        return "J and its orthogonal complement do not commute"
    return None


def decompose(A: HomLieSuperAlgebra, phi: BilinearForm | None = None) -> Decomposition:
    """Split A into minimal graded ideals, each step taking J and its phi-orthogonal complement.

    The minimal ideal chosen at each step is the smallest by (dimension,
    canonical basis). Every split is certified directly; a non-invariant phi is
    only rejected when a certification fails.
    """
    if phi is None:
        phi = killing_form(A)
    if phi.parity == "mixed":
        raise NotHomogeneous("form has both even and odd parts")
    if not is_nondegenerate(A, phi):
        raise DegenerateForm(f"radical has dimension {radical(A, phi).dim}")
    witness = has_commutative_graded_ideal(A)
    if witness is not None:
        raise CommutativeIdealPresent(witness)
    invariant, _ = is_invariant(A, phi)
    n = A.dim
    current = Subspace.full(n)
    pieces: list[Subspace] = []
    steps = []
    while not current.is_zero():
        J = minimal_graded_ideals(A, current)[0]
        Jp = subspace_intersect(current, orthogonal_complement(A, phi, J))
        problem = _certify_split(A, current, J, Jp)
        if problem is not None:
            if not invariant:
                raise NotInvariant(f"form is not invariant and the split fails: {problem}")
            raise DecompositionError(problem)
        pieces.append(J)
        steps.append((J, Jp))
        current = Jp
    pieces.sort(key=lambda W: W.pivots())
    summands = []
    for k, W in enumerate(pieces):
        rest = sum_of([V for V in pieces if V is not W], n)
        B, inv = induced_algebra(A, W, rest, name=f"{A.name}[{k + 1}]" if len(pieces) > 1 else A.name)
        if not is_simple(B):
            raise DecompositionError(f"summand {k + 1} is not simple")
        summands.append(Summand(W, B, inv, phi.restrict(W)))
    ortho = all(_cross_zero(phi, U, V) for U, V in combinations(pieces, 2))
    brk = all(bracket_span(A, U, V).is_zero() for U, V in combinations(pieces, 2))
    if not is_direct_sum(pieces) or not sum_of(pieces, n).is_full():
        raise DecompositionError("summands do not form a direct sum")
    return Decomposition(tuple(summands), ortho, brk, phi, invariant, tuple(steps))


def _cross_zero(phi: BilinearForm, U: Subspace, V: Subspace) -> bool:
    return all(phi(u, v) == ZERO and phi(v, u) == ZERO for u in U.basis for v in V.basis)


@dataclass(frozen=True)
class CriterionReport:
    killing_nondegenerate: bool
    commutative_ideal: Subspace | None
    decomposition: Decomposition | None
    summand_simple: tuple = ()
    summand_classical: tuple = ()
    summand_restricted_nondegenerate: tuple = ()
    summand_standalone_nondegenerate: tuple = ()
    summand_reductive_even: tuple = ()
    error: str | None = None

    @property
    def applicable(self) -> bool:
        return self.killing_nondegenerate

    @property
    def consistent(self) -> bool:
        """No claim of the criterion is violated."""
        if not self.killing_nondegenerate:
            return True
        if self.commutative_ideal is not None or self.decomposition is None:
            return False
        return all(
            self.summand_simple
            + self.summand_classical
            + self.summand_restricted_nondegenerate
        )


def killing_nondegenerate_criterion(A: HomLieSuperAlgebra) -> CriterionReport:
    K = killing_form(A)
    nondeg = is_nondegenerate(A, K)
    witness = has_commutative_graded_ideal(A)
    if not nondeg:
        return CriterionReport(False, witness, None)
    try:
        dec = decompose(A, K)
    except DecompositionError as exc:
        return CriterionReport(True, witness, None, error=f"{type(exc).__name__}: {exc}")
    simple, classical, restricted, standalone, reductive = [], [], [], [], []
    for s in dec.summands:
        B = s.algebra
        simple.append(bool(is_simple(B)))
        classical.append(is_classical(B))
        restricted.append(kernel(s.restricted_form).is_zero())
        standalone.append(is_nondegenerate(B, killing_form(B)))
        reductive.append(is_reductive_even_part(B))
    return CriterionReport(
        True,
        witness,
        dec,
        tuple(simple),
        tuple(classical),
        tuple(restricted),
        tuple(standalone),
        tuple(reductive),
    )


def one_sided_ideals_are_block_sums(A: HomLieSuperAlgebra, decomposition: Decomposition) -> bool:
    """Falsification search: every left or right closure of a seed is a sum of summands.

    Seeds are e_i, e_i + e_j and, for every nonempty set R of summands, the sum
    of the first basis vectors of the summands in R.
    """
    n = A.dim
    blocks = decomposition.subspaces
    seeds = [unit_vector(n, i) for i in range(n)]
    seeds += [add_vectors(seeds[i], seeds[j]) for i, j in combinations(range(n), 2)]
    for r in range(1, len(blocks) + 1):
        for R in combinations(blocks, r):
            v = tuple(ZERO for _ in range(n))
            for W in R:
                v = add_vectors(v, W.basis[0])
            seeds.append(v)
    for side in ("left", "right"):
        kind = IdealSpec(side, graded=False)
        for s in seeds:
            C = closure(A, [s], kind)
            inside = [W for W in blocks if W.is_subspace_of(C)]
            if sum_of(inside, n) != C:
                return False
    return True
