import random

import pytest
from hypothesis import given, strategies as st

from hecke_spheres.coxeter import SignVector, SignedPerm, all_sign_vectors, coset_rep
from hecke_spheres.errors import RankMismatch
from hecke_spheres.hecke import HeckeElt, star1
from hecke_spheres.scalars import ONE, P, Q, ZERO
from hecke_spheres.vmodule import (VElt, act_gen, act_hecke, basis_product, bilinear_B,
                                   generator_sum, iota_u, product, product_via_hecke,
                                   symmetrize, tau)

COEFFS = [ZERO, ONE, -ONE, P, Q, P - Q, Q.inv()]


def u(text, basis="u"):
    return VElt.basis_vector(SignVector.parse(text), basis)


def rand_v(n, draw):
    return VElt(n, [draw(st.sampled_from(COEFFS)) for _ in range(1 << n)])


def test_generator_rules():
    assert act_gen(2, u("++")) == u("+-")
    assert act_gen(1, u("--")) == u("--").scale(Q)
    assert act_gen(1, u("-+")) == u("-+").scale(Q - ONE) + u("+-").scale(Q)
    assert act_gen(1, u("+-")) == u("-+")
    assert act_gen(1, u("-", "u")) == u("-").scale(P - ONE) + u("+").scale(P)


def test_n1_square():
    assert product(u("-"), u("-")) == u("-").scale(P - ONE) + u("+").scale(P)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generators_multiply_to_basis(n):
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if j != k:
                xj, xk = SignVector.x_gen(j, n), SignVector.x_gen(k, n)
                assert basis_product(xj, xk) == VElt.basis_vector(xj * xk)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_product_against_hecke_route(n):
    for x in all_sign_vectors(n):
        for y in all_sign_vectors(n):
            assert basis_product(x, y) == product_via_hecke(x, y)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_commutative_associative_unit(n):
    xs = all_sign_vectors(n)
    one = VElt.one(n)
    for x in xs:
        assert product(one, VElt.basis_vector(x)) == VElt.basis_vector(x)
        for y in xs:
            xy = basis_product(x, y)
            assert xy == basis_product(y, x)
    rng = random.Random(n)
    for _ in range(30):
        x, y, z = (rng.choice(xs) for _ in range(3))
        assert product(basis_product(x, y), VElt.basis_vector(z)) == \
            product(VElt.basis_vector(x), basis_product(y, z))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bilinear_form_on_bases(n):
    xs = all_sign_vectors(n)
    for x in xs:
        assert tau(VElt.basis_vector(x)) == (ONE if x.weight == 0 else ZERO)
        for y in xs:
            d = ONE if x == y else ZERO
            assert bilinear_B(VElt.basis_vector(x), VElt.basis_vector(y)) == d * iota_u(x)
            assert bilinear_B(VElt.basis_vector(x, "uhat"), VElt.basis_vector(y, "uhat")) == d
            assert bilinear_B(VElt.basis_vector(x, "u"), VElt.basis_vector(y, "v")) == d


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pi_of_coset_reps(n):
    for x in all_sign_vectors(n):
        ux = coset_rep(x).u_x
        assert act_hecke(HeckeElt.basis(ux), VElt.one(n)) == VElt.basis_vector(x)
        assert iota_u(x) == P ** x.weight * Q ** (ux.length() - x.weight)


@given(st.data())
def test_form_symmetric_associative_adjoint(data):
    n = data.draw(st.integers(1, 3))
    a, b, c = (rand_v(n, data.draw) for _ in range(3))
    assert bilinear_B(a, b) == bilinear_B(b, a)
    assert bilinear_B(product(a, b), c) == bilinear_B(a, product(b, c))
    w = SignedPerm(data.draw(st.permutations(range(1, n + 1))))
    if data.draw(st.booleans()):
        w = SignedPerm.generator(n, n) * w
    T = HeckeElt.basis(w)
    assert bilinear_B(act_hecke(T, a), b) == bilinear_B(a, act_hecke(star1(T), b))
    assert act_hecke(T * T, a) == act_hecke(T, act_hecke(T, a))


@given(st.data())
def test_basis_round_trip(data):
    n = data.draw(st.integers(1, 3))
    v = rand_v(n, data.draw)
    for basis in ("uhat", "v"):
        assert v.to_basis(basis).u() == v
    assert VElt.from_json(v.to_basis("uhat").to_json()) == v


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetrize(n):
    assert symmetrize(VElt.one(n)) == VElt.one(n)
    for x in all_sign_vectors(n):
        w = symmetrize(VElt.basis_vector(x))
        assert symmetrize(w) == w
        for i in range(1, n):
            assert act_gen(i, w) == w.scale(Q)


def test_symmetrize_n2_by_hand():
    # P = (1 + T_1)/(1 + q); T_1 u(-,+) = (q-1) u(-,+) + q u(+,-)
    w = symmetrize(u("-+"))
    assert w == (u("-+").scale(Q) + u("+-").scale(Q)).scale((ONE + Q).inv())
    assert generator_sum(2) == u("-+") + u("+-")


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        product(VElt.one(2), VElt.one(3))
