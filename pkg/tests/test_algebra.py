from fractions import Fraction as F

import pytest

from homlie import abelian, load_fixture, verify, yau_twist
from homlie.algebra import (
    HomLieSuperAlgebra,
    NotAlphaFixed,
    NotAutomorphism,
    ParityViolation,
    SkewViolation,
    AlphaDegreeViolation,
    check_hom_jacobi,
    check_multiplicative,
    check_regular,
    hom_jacobi_sum,
    super_commutator,
    supertrace,
)
from homlie.linalg import Matrix, Subspace

import oracles


def test_bracket_basics():
    A = load_fixture("sl2")
    h, e = A.basis_vector("h"), A.basis_vector("e")
    assert A.bracket(h, e) == A.element({"e": 2})
    assert A.bracket((0, 0, 0), e) == (0, 0, 0)
    x = A.element({"e": 3, "f": F(1, 2), "h": -1})
    assert A.bracket(x, x) == (0, 0, 0)


def test_adjoint_of_h():
    A = load_fixture("sl2")
    assert A.adjoint(A.basis_vector("h")) == Matrix.diag([2, -2, 0])
    assert A.adjoint((0, 0, 0)).is_zero()
    x, y = A.element({"e": 1, "h": 2}), A.element({"f": -3, "h": F(1, 5)})
    assert A.adjoint(tuple(a + b for a, b in zip(x, y))) == A.adjoint(x) + A.adjoint(y)


def test_hom_jacobi_examples():
    assert check_hom_jacobi(abelian(3).with_alpha(Matrix.diag([1, 2, 3])))[0]
    assert check_hom_jacobi(load_fixture("sl2")) == (True, None)
    # Rescaling only h keeps the identity: every h-term is [h, [y, z]] with
    # [y, z] in span(h) or a cancelling pair.
    assert check_hom_jacobi(load_fixture("sl2").with_alpha(Matrix.diag([1, 1, 2]))) == (True, None)
    bad = load_fixture("sl2").with_alpha(Matrix.diag([2, 1, 1]))
    ok, w = check_hom_jacobi(bad)
    assert not ok
    assert w == (0, 1, 2)
    assert any(hom_jacobi_sum(bad, *w))


def test_witness_is_lexicographically_first():
    bad = load_fixture("sl2").with_alpha(Matrix.diag([2, 1, 1]))
    _, w = check_hom_jacobi(bad)
    n = bad.dim
    first = next(t for t in ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
                 if any(hom_jacobi_sum(bad, *t)))
    assert w == first


def test_multiplicative_and_regular():
    sl2 = load_fixture("sl2")
    assert check_multiplicative(sl2)[0]
    assert check_multiplicative(load_fixture("hsl2"))[0]
    assert not check_multiplicative(sl2.with_alpha(Matrix.diag([2, 2, 2])))[0]
    assert check_regular(load_fixture("hosp12"))
    assert not check_regular(load_fixture("c11"))


def test_ad_k():
    sl2 = load_fixture("sl2")
    h = sl2.basis_vector("h")
    assert sl2.ad_k(h, 0) == -sl2.adjoint(h)
    assert sl2.ad_k(h, 3) == sl2.ad_k(h, 0)
    hsl2 = load_fixture("hsl2")
    m = hsl2.ad_k(hsl2.basis_vector("h"), 1)
    c = oracles.structure_tensor(hsl2)
    al = oracles.alpha_matrix(hsl2)
    for j in range(3):
        col = list(al[:, j])
        expect = oracles.bracket(c, col, [0, 0, 1])
        assert [oracles.sym(x) for x in m.column(j)] == expect
    with pytest.raises(NotAlphaFixed):
        hsl2.ad_k(hsl2.basis_vector("e"), 1)


def test_grading_automorphism():
    A = load_fixture("osp12")
    g = A.grading_automorphism()
    assert g @ g == Matrix.identity(5)
    for i in range(5):
        for j in range(5):
            assert g @ A.structure[i][j] == A.bracket(g.column(i), g.column(j))
    graded = Subspace.span([A.element({"h": 1, "e": 2}), A.element({"x": 1})], 5)
    mixed = Subspace.span([A.element({"h": 1, "x": 1})], 5)
    assert graded.is_invariant_under(g)
    assert not mixed.is_invariant_under(g)


def test_supertrace():
    assert supertrace(Matrix.identity(3), 2) == 1
    A = load_fixture("osp12")
    a, b = A.adjoint(A.basis_vector("x")), A.adjoint(A.basis_vector("y"))
    assert supertrace(super_commutator(a, b, 3), 3) == 0
    c, d = A.adjoint(A.basis_vector("e")), A.adjoint(A.element({"f": 2, "h": -1}))
    assert supertrace(super_commutator(c, d, 3), 3) == 0


def test_alpha_preserves_derived_subalgebra(any_fixture):
    A = any_fixture
    if check_multiplicative(A)[0]:
        assert A.derived_subalgebra().is_invariant_under(A.alpha)


def test_yau_twist():
    sl2 = load_fixture("sl2")
    assert yau_twist(sl2, Matrix.identity(3)) is sl2
    t = yau_twist(sl2, Matrix.diag([2, F(1, 2), 1]))
    assert t.same_structure(load_fixture("hsl2"))
    assert verify(t).ok and verify(t).multiplicative
    osp = load_fixture("osp12")
    t2 = yau_twist(osp, Matrix.diag([1, 4, F(1, 4), 2, F(1, 2)]))
    assert t2.same_structure(load_fixture("hosp12"))
    with pytest.raises(NotAutomorphism):
        yau_twist(sl2, Matrix.diag([2, 2, 1]))


def test_invalid_algebras_rejected():
    with pytest.raises(ParityViolation):
        HomLieSuperAlgebra.from_brackets("p", ["a"], ["b"], {("a", "b"): {"a": 1}})
    with pytest.raises(AlphaDegreeViolation):
        HomLieSuperAlgebra.from_brackets("q", ["a"], ["b"], {}, alpha=[[1, 1], [0, 1]])
    h = HomLieSuperAlgebra.from_brackets("s", ["a", "b"], [], {("a", "b"): {"a": 1}})
    with pytest.raises(SkewViolation):
        HomLieSuperAlgebra(h.name, 2, 0, h.basis_names,
                           (h.structure[0], (h.structure[0][1], h.structure[1][1])), h.alpha)


def test_zero_dimensional_algebra():
    A = abelian(0)
    assert verify(A).ok
    assert A.derived_subalgebra().is_zero()


def test_fixtures_pass_axioms(any_fixture):
    r = verify(any_fixture)
    assert r.skew_ok and r.hom_jacobi_ok
