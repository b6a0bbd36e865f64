import random

import pytest
from hypothesis import given, strategies as st

from hecke_spheres.coxeter import SignedPerm, all_signed_perms, symmetric_group
from hecke_spheres.errors import CapExceeded, DomainError, RankMismatch
from hecke_spheres.hecke import (HeckeElt, check_cap, gen_mul_left, gen_mul_right, index_rep,
                                 index_rep_prime, max_n, sign_rep, star1, star2, symmetrizer,
                                 symmetrizer_terms)
from hecke_spheres.scalars import ONE, P, Q, ZERO, poincare_a, poincare_b

from test_coxeter import bfs_lengths

COEFFS = [ONE, -ONE, P, Q, ONE - Q, P.inv() + Q, Q.inv() * P]


def regular_matrices(n):
    """Left regular action of each T_i as a dict-of-dicts, from BFS lengths only."""
    dist = bfs_lengths(n)
    out = {}
    for i in range(1, n + 1):
        s = SignedPerm.generator(i, n)
        c = P if i == n else Q
        m = {}
        for w in dist:
            sw = s * w
            if dist[sw] > dist[w]:
                m[w] = {sw: ONE}
            else:
                m[w] = {w: c - ONE, sw: c}
        out[i] = m
    return out


def apply_matrix(m, vec):
    out = {}
    for w, c in vec.items():
        for v, a in m[w].items():
            out[v] = out.get(v, ZERO) + a * c
    return {w: c for w, c in out.items() if not c.is_zero()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_products_against_regular_representation(n):
    mats = regular_matrices(n)
    rng = random.Random(n)
    elems = list(all_signed_perms(n))
    for _ in range(25):
        a, b = rng.choice(elems), rng.choice(elems)
        vec = {b: ONE}
        for i in reversed(a.reduced_word()):
            vec = apply_matrix(mats[i], vec)
        assert (HeckeElt.basis(a) * HeckeElt.basis(b)).terms == vec


@pytest.mark.parametrize("n", [1, 2, 3])
def test_group_algebra_at_one(n):
    elems = list(all_signed_perms(n))
    rng = random.Random(7)
    for _ in range(20):
        a, b = rng.choice(elems), rng.choice(elems)
        prod = HeckeElt.basis(a) * HeckeElt.basis(b)
        spec = {w: c.specialize(1, 1) for w, c in prod.terms.items()}
        assert {w: v for w, v in spec.items() if v} == {a * b: 1}


@pytest.mark.parametrize("n", range(1, 5))
def test_quadratic_and_braid(n):
    one = HeckeElt.one(n)
    T = [None] + [HeckeElt.gen(i, n) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        c = P if i == n else Q
        assert T[i] * T[i] == T[i].scale(c - ONE) + one.scale(c)
    for i in range(1, n):
        j = i + 1
        if j == n:
            assert T[i] * T[j] * T[i] * T[j] == T[j] * T[i] * T[j] * T[i]
        else:
            assert T[i] * T[j] * T[i] == T[j] * T[i] * T[j]


def _rand(n, draw):
    elems = list(all_signed_perms(n))
    k = draw(st.integers(1, 3))
    return HeckeElt(n, {draw(st.sampled_from(elems)): draw(st.sampled_from(COEFFS))
                        for _ in range(k)})


@given(st.data())
def test_associativity_and_morphisms(data):
    n = data.draw(st.integers(1, 3))
    a, b, c = (_rand(n, data.draw) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    for rep in (index_rep, index_rep_prime, sign_rep):
        assert rep(a * b) == rep(a) * rep(b)
    assert star1(a * b) == star1(b) * star1(a)
    assert star2(a * b) == star2(b) * star2(a)
    assert star1(star2(a)) == star2(star1(a))
    assert star1(star1(a)) == a and star2(star2(a)) == a


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetrizer(n):
    Ps = symmetrizer(n)
    perms = [w for w, _ in symmetrizer_terms(n)]
    assert len(perms) == len(set(perms)) == len(list(symmetric_group(n)))
    assert set(Ps.terms) == set(perms)
    assert index_rep(Ps) == poincare_a(n)
    for i in range(1, n):
        d = HeckeElt.gen(i, n) - HeckeElt.one(n).scale(Q)
        assert (Ps * d).is_zero() and (d * Ps).is_zero()


def test_symmetrizer_words_spell_their_element():
    for sigma, word in symmetrizer_terms(4):
        e = HeckeElt.one(4)
        for i in word:
            e = gen_mul_left(i, e)
        assert e == HeckeElt.basis(sigma)


def test_index_rep_of_full_sum():
    for n in range(1, 4):
        total = HeckeElt(n, {w: ONE for w in all_signed_perms(n)})
        assert index_rep(total) == poincare_b(n)


def test_left_right_generators():
    a = HeckeElt.basis(SignedPerm.parse("[-2, 1]"), P)
    assert gen_mul_right(a, 1) == a * HeckeElt.gen(1, 2)
    assert gen_mul_left(2, a) == HeckeElt.gen(2, 2) * a
    assert HeckeElt.from_pairs(2, a.to_pairs()) == a


def test_errors(monkeypatch):
    with pytest.raises(RankMismatch):
        HeckeElt.one(2) * HeckeElt.one(3)
    with pytest.raises(DomainError):
        gen_mul_left(3, HeckeElt.one(2))
    with pytest.raises(CapExceeded):
        check_cap(9)
    monkeypatch.setenv("HECKE_SPHERES_MAX_N", "9")
    assert max_n() == 9
    monkeypatch.setenv("HECKE_SPHERES_MAX_N", "50")
    assert max_n() == 10
