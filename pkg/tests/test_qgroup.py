import pytest

from hecke_spheres.coxeter import SignVector, all_sign_vectors
from hecke_spheres.characters import DualElt, fourier
from hecke_spheres.qgroup import (SparseMatrix, UqElt, UqGen, apply_t, check_commutant,
                                  clebsch_gordan_multiplicities, commutant_dimension_hecke,
                                  commutant_dimension_uq, fundamental_rep, hecke_span_dimension,
                                  invariant_subspace, rho_matrix, star_gen, t_action, t_matrix,
                                  t_star)
from hecke_spheres.scalars import ONE, Q, Q_HALF, ZERO
from hecke_spheres.vmodule import VElt, act_gen, bilinear_B


def mat2(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(2)), ZERO) for j in range(2)]
            for i in range(2)]


def test_fundamental_relations():
    K, Ki, E, F = (fundamental_rep(g) for g in (UqGen.K, UqGen.KINV, UqGen.E, UqGen.F))
    assert mat2(K, Ki) == [[ONE, ZERO], [ZERO, ONE]]
    ef, fe = mat2(E, F), mat2(F, E)
    c = (Q_HALF - Q_HALF.inv()).inv()
    assert [[ef[i][j] - fe[i][j] for j in range(2)] for i in range(2)] == \
        [[(K[i][j] - Ki[i][j]) * c for j in range(2)] for i in range(2)]
    assert mat2(mat2(K, E), Ki) == [[Q * v for v in r] for r in E]


@pytest.mark.parametrize("n", range(1, 6))
def test_action_relations(n):
    K, Ki, E, F = (t_action(g, n) for g in (UqGen.K, UqGen.KINV, UqGen.E, UqGen.F))
    I = SparseMatrix.identity(1 << n)
    assert K @ Ki == I
    assert K @ E == (E @ K).scale(Q)
    assert K @ F == (F @ K).scale(Q.inv())
    assert E @ F - F @ E == (K - Ki).scale((Q_HALF - Q_HALF.inv()).inv())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lowest_vector(n):
    bottom = VElt.basis_vector(SignVector(n, (1 << n) - 1), "uhat")
    assert apply_t(UqElt.gen(UqGen.K), bottom) == bottom.scale(Q_HALF ** n)
    assert apply_t(UqElt.gen(UqGen.E), bottom).is_zero()


def test_n1_raising():
    assert apply_t(UqElt.gen(UqGen.E), VElt.basis_vector(SignVector.parse("+"), "uhat")) == \
        VElt.basis_vector(SignVector.parse("-"), "uhat")


def test_star():
    assert star_gen(UqGen.K).terms == UqElt.gen(UqGen.K).terms
    assert star_gen(UqGen.E).terms == {(UqGen.F, UqGen.K): Q_HALF.inv()}
    for g in UqGen:
        X = UqElt.gen(g)
        assert t_matrix(X.star().star(), 3) == t_matrix(X, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_adjoint(n):
    xs = all_sign_vectors(n)
    for g in UqGen:
        X = UqElt.gen(g)
        for x in xs:
            v = VElt.basis_vector(x, "uhat")
            for y in xs:
                w = VElt.basis_vector(y, "uhat")
                assert bilinear_B(apply_t(X, v), w) == bilinear_B(v, apply_t(X.star(), w))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_commutation(n):
    rep = check_commutant(n, dimensions=False)
    assert rep.passed and len(rep.checks) == 4 * (n - 1)


def test_clebsch_gordan():
    assert clebsch_gordan_multiplicities(2) == {2: 1, 0: 1}
    assert clebsch_gordan_multiplicities(3) == {3: 1, 1: 2}
    assert clebsch_gordan_multiplicities(4) == {4: 1, 2: 3, 0: 2}


@pytest.mark.parametrize("n,uq,hecke", [(2, 2, 10), (3, 5, 20), (4, 14, 35)])
def test_commutant_dimensions(n, uq, hecke):
    # double centralizer: each commutant is the span of the other side
    assert commutant_dimension_uq(n) == uq
    assert commutant_dimension_uq(n, exact=False) == uq
    assert commutant_dimension_hecke(n) == hecke
    assert hecke_span_dimension(n) == uq


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_invariant_subspace(n):
    basis = invariant_subspace(n)
    assert len(basis) == n + 1
    bottom = VElt.basis_vector(SignVector(n, (1 << n) - 1))
    for v in basis:
        for i in range(1, n):
            assert act_gen(i, v) == v.scale(Q)
    for i in range(1, n):
        assert act_gen(i, bottom) == bottom.scale(Q)
    for g in UqGen:
        for v in basis:
            moved = apply_t(UqElt.gen(g), v)
            assert all(act_gen(i, moved) == moved.scale(Q) for i in range(1, n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_t_star_intertwines_fourier(n):
    for g in UqGen:
        X = UqElt.gen(g)
        for y in all_sign_vectors(n):
            chi = DualElt.char(y)
            assert fourier(t_star(X, chi)) == apply_t(X, fourier(chi))
