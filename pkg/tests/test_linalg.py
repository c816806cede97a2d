from fractions import Fraction as F
from itertools import combinations

import pytest

from homlie.linalg import (
    DimensionMismatch,
    EchelonBasis,
    Matrix,
    Subspace,
    as_scalar,
    determinant,
    format_scalar,
    inverse,
    is_direct_sum,
    kernel,
    rank,
    rref,
    solve,
    solve_sparse,
    subspace_intersect,
    subspace_sum,
    unit_vector,
)


def minor_rank(rows):
    """Largest k with a nonzero k x k minor, by exhaustive search."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    for k in range(min(m, n), 0, -1):
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                if determinant(Matrix.from_rows([[rows[r][c] for c in cs] for r in rs])) != 0:
                    return k
    return 0


def test_scalars_are_exact():
    assert as_scalar("6/4") == F(3, 2)
    assert F(1, 3) + F(1, 6) == F(1, 2)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    assert format_scalar(F(4, 2)) == "2"
    assert format_scalar(F(-3, 6)) == "-1/2"


def test_rref_examples():
    assert rref(Matrix.identity(2)) == Matrix.identity(2)
    assert rref(Matrix.from_rows([[2, 4], [1, 2]])) == Matrix.from_rows([[1, 2], [0, 0]])


def test_rank_matches_minor_expansion():
    rows = [[1, 2, 3, 4], [F(1, 2), 0, -1, 2], [F(3, 2), 2, 2, 6], [0, 7, F(-1, 3), 1]]
    assert rank(Matrix.from_rows(rows)) == minor_rank(rows)
    rows[3] = [2, 4, 6, 8]
    assert rank(Matrix.from_rows(rows)) == minor_rank(rows) == 2


def test_kernel_examples():
    assert kernel(Matrix.zeros(3)).is_full()
    assert kernel(Matrix.identity(3)).is_zero()
    m = Matrix.from_rows([[1, 1, 0]])
    K = kernel(m)
    assert K.dim == 2
    for b in K.basis:
        assert m @ b == (0,)


def test_solve_examples():
    assert solve(Matrix.identity(2), [1, 2]) == (1, 2)
    x = solve(Matrix.from_rows([[1, 1]]), [3])
    assert x[0] + x[1] == 3
    assert solve(Matrix.from_rows([[1], [1]]), [0, 1]) is None
    with pytest.raises(DimensionMismatch):
        solve(Matrix.identity(2), [1, 2, 3])


def test_inverse_and_determinant():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert determinant(m) == 1
    assert m @ inverse(m) == Matrix.identity(2)
    assert inverse(Matrix.from_rows([[1, 2], [2, 4]])) is None
    assert m.power(-2) @ m.power(2) == Matrix.identity(2)


def test_subspace_sum_and_intersection():
    e1 = Subspace.span([unit_vector(2, 0)], 2)
    e2 = Subspace.span([unit_vector(2, 1)], 2)
    assert subspace_sum(e1, e2).is_full()
    assert subspace_intersect(e1, e2).is_zero()
    assert subspace_sum(e1, e1) == e1 == subspace_intersect(e1, e1)
    assert is_direct_sum([e1, e2])
    assert not is_direct_sum([e1, e2, Subspace.span([(1, 1)], 2)])
    with pytest.raises(DimensionMismatch):
        subspace_sum(e1, Subspace.zero(3))


def test_canonical_form_is_unique():
    a = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    b = Subspace.span([(1, 3, 4), (2, 5, 7)], 3)
    assert a == b
    assert a.basis == b.basis


def test_coordinates_and_membership():
    W = Subspace.span([(1, 0, 2), (0, 1, -1)], 3)
    assert W.coordinates((3, 4, 2)) == (3, 4)
    assert W.coordinates((0, 0, 1)) is None
    assert (2, 2, 2) in W


def test_echelon_basis_incremental():
    e = EchelonBasis(3)
    assert e.add((1, 1, 0))
    assert e.add({2: 5})
    assert not e.add((2, 2, 10))
    assert e.to_subspace() == Subspace.span([(1, 1, 0), (0, 0, 1)], 3)
    assert e.null_space() == Subspace.span([(1, -1, 0)], 3)


def test_solve_sparse():
    assert solve_sparse([({0: 1, 1: 1}, 3), ({1: 1}, 1)], 2) == (2, 1)
    assert solve_sparse([({0: 1}, 1), ({0: 2}, 3)], 1) is None
