from fractions import Fraction

import pytest

from hecke_spheres.coxeter import SignVector, all_sign_vectors
from hecke_spheres.errors import DomainError
from hecke_spheres.qgroup import UqGen
from hecke_spheres.qseries import q_binomial, q_pochhammer
from hecke_spheres.scalars import ONE, P, P_HALF, Q, ZERO, Scalar
from hecke_spheres.spherical import (LieType, act_efk, boundary_value, build_invariant_basis,
                                     eigen_operator_check, eigenvalue, homomorphism_check,
                                     identify_krawtchouk, invariant_norm, krawtchouk_table,
                                     laplace_identity_check, lemma_product_check,
                                     lie_type_preset, orthogonality_Hf, phi_convolution_check,
                                     phi_dual, phi_dual_via_symmetrization, phi_eval,
                                     phi_table_eval, phi_via_recurrence,
                                     printed_boundary_value, product_coeffs,
                                     product_coeffs_check, weight_Hf)
from hecke_spheres.vmodule import VElt, bilinear_B

from conftest import same


def test_n1_worked_example():
    b = build_invariant_basis(1)
    assert b.w[0] == VElt.one(1)
    assert b.w[1] == VElt.basis_vector(SignVector.parse("-")).scale(P.inv())
    assert bilinear_B(b.w[1], b.w[1]) == P.inv()
    assert phi_eval(1, 1, 1) == -P.inv()
    assert phi_via_recurrence(1).values == ((ONE, ONE), (ONE, -P.inv()))
    assert act_efk(UqGen.E, b, 0) == b.w[1].scale(P_HALF)


def test_n2_table_by_hand():
    # solve the recurrence by hand at n = 2; row f = 1:
    # lambda = p(1-q) - (1-q), d = 0: lambda = p(1-q^2) phi(1); row f = 2 has
    # lambda = -(1-q^2), so phi_2(w_1) = -1/p
    t = phi_via_recurrence(2)
    assert same(t[1, 1], "(p - 1)/(p*(1 + q))")
    assert same(t[2, 1], "-1/p")
    assert t[2, 2] == boundary_value(2, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_triple_agreement(n):
    rep = identify_krawtchouk(n)
    assert rep.passed, rep.failures()[:3]
    table = phi_table_eval(n)
    assert all(v == ONE for v in table.values[0])
    assert all(row[0] == ONE for row in table.values)


@pytest.mark.parametrize("n", range(1, 5))
def test_phi_is_independent_of_y(n):
    for f in range(n + 1):
        for d in range(n + 1):
            phi_eval(f, d, n, check_all=True)


@pytest.mark.parametrize("n", range(1, 6))
def test_boundary_value(n):
    table = phi_table_eval(n)
    for f in range(n + 1):
        assert table[f, n] == boundary_value(f, n)
    # the other printing disagrees already at f = 0
    assert printed_boundary_value(0, n) != table[0, n]


@pytest.mark.parametrize("n", range(1, 5))
def test_invariant_basis(n):
    b = build_invariant_basis(n, check_representatives=True)
    for d in range(n + 1):
        for e in range(n + 1):
            exp = invariant_norm(n, d) if d == e else ZERO
            assert bilinear_B(b.w[d], b.w[e]) == exp
        for g in UqGen:
            act_efk(g, b, d)
    assert act_efk(UqGen.F, b, 0).is_zero()
    with pytest.raises(DomainError):
        act_efk(UqGen.K, b, n + 1)


def test_norm_closed_form():
    assert invariant_norm(3, 2) == (P * P * Q * q_binomial(3, 2)).inv()


@pytest.mark.parametrize("n", range(1, 6))
def test_orthogonality(n):
    assert orthogonality_Hf(n).passed
    assert weight_Hf(0, n) == q_pochhammer(-P, n)
    assert weight_Hf(n, n) == q_pochhammer(-P.inv(), n)


def test_H1_n1():
    assert weight_Hf(1, 1) == ONE + P.inv()


@pytest.mark.parametrize("n", range(1, 6))
def test_recurrence_identity(n):
    assert laplace_identity_check(n).passed


@pytest.mark.parametrize("n", range(1, 5))
def test_eigen_operator_and_convolution(n):
    assert eigen_operator_check(n).passed
    assert phi_convolution_check(n).passed


def test_eigenvalue_f0():
    from hecke_spheres.scalars import Q_HALF
    n = 3
    Pi = P_HALF.inv()
    exp = (P_HALF * Q_HALF ** n - Pi * Q_HALF.inv() ** n + Pi - P_HALF) / (Q_HALF - Q_HALF.inv())
    assert eigenvalue(0, n) == exp


@pytest.mark.parametrize("n", range(1, 5))
def test_phi_dual_matches_symmetrization(n):
    for f in range(n + 1):
        assert phi_dual(f, n) == phi_dual_via_symmetrization(f, n)


@pytest.mark.parametrize("n", range(1, 4))
def test_product_coefficients(n):
    assert product_coeffs_check(n).passed
    for d in range(n + 1):
        assert product_coeffs(0, d, n) == [ONE if l == d else ZERO for l in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 5))
def test_lemma_exhaustive(n):
    for i in range(1, n + 1):
        zs = all_sign_vectors(i - 1) if i > 1 else [""]
        for z in zs:
            assert lemma_product_check(i, z, n)


def test_lemma_validation():
    with pytest.raises(DomainError):
        lemma_product_check(2, "", 3)
    with pytest.raises(DomainError):
        lemma_product_check(0, "", 3)


@pytest.mark.parametrize("n", range(1, 4))
def test_homomorphism(n):
    assert homomorphism_check(n).passed


@pytest.mark.parametrize("group,q0,expected", [
    ("B", 3, (3, 3)), ("C", 5, (5, 5)), ("2D", 2, (4, 2)),
    ("2A_odd", 2, (2, 4)), ("2A-odd", 3, (3, 9)), ("2A_even", 2, (8, 4)),
])
def test_presets(group, q0, expected):
    assert lie_type_preset(group, q0) == tuple(Fraction(v) for v in expected)


def test_preset_errors():
    with pytest.raises(DomainError):
        lie_type_preset(LieType.B, 0)
    with pytest.raises(DomainError):
        lie_type_preset("E8", 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_presets_specialize(n):
    table = phi_via_recurrence(n)
    for group in LieType:
        for q0 in (2, 3, 4):
            p, q = lie_type_preset(group, q0)
            vals = table.specialize(p=p, q=q)
            assert vals[0] == [1] * (n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_classical_limit(n):
    from hecke_spheres.qseries import classical_krawtchouk
    table = phi_via_recurrence(n)
    for f in range(n + 1):
        for d in range(n + 1):
            assert table[f, d].specialize(1, 1) == classical_krawtchouk(f, d, n)


def test_table_json():
    doc = phi_via_recurrence(1).to_json()
    assert doc == {"n": 1, "rows": [{"f": 0, "values": ["1", "1"]},
                                     {"f": 1, "values": ["1", "(-1)/(p)"]}]}
    assert krawtchouk_table(2).values == phi_via_recurrence(2).values
