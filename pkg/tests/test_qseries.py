from fractions import Fraction
from math import comb, factorial

import pytest
import sympy as sp

from hecke_spheres.errors import DomainError
from hecke_spheres.qseries import (QKrawParams, check_contiguous, check_difference_equation,
                                   classical_krawtchouk, dual_q_krawtchouk,
                                   printed_difference_equation_holds, q_binomial,
                                   q_krawtchouk, q_pochhammer)
from hecke_spheres.scalars import ONE, P, Q, ZERO, Scalar, q_power

from conftest import p, q, same

a_sym = sp.Symbol("a")


def _poch(x, k):
    return sp.prod([1 - x * q ** i for i in range(k)])


def sympy_krawtchouk(n, x, a, N):
    """3phi2(q^-n, q^-x, -q^(n-N)/a; q^-N, 0; q, q), summed directly."""
    return sum(_poch(q ** -n, k) * _poch(q ** -x, k) * _poch(-q ** (n - N) / a, k)
               / (_poch(q ** -N, k) * _poch(q, k)) * q ** k for k in range(n + 1))


def test_pochhammer_examples():
    assert q_pochhammer(P, 0) == ONE
    assert q_pochhammer(Q, 2) == (ONE - Q) * (ONE - Q * Q)
    assert q_pochhammer(-P, 1) == ONE + P


def test_binomial_examples():
    assert q_binomial(3, 0) == ONE
    assert q_binomial(2, 1) == ONE + Q
    assert q_binomial(4, 2) == q_binomial(3, 2) + Q * Q * q_binomial(3, 1)
    with pytest.raises(DomainError):
        q_binomial(2, 3)


@pytest.mark.parametrize("n", range(0, 6))
def test_binomial_at_one(n):
    for d in range(n + 1):
        assert q_binomial(n, d).specialize(1, 1) == comb(n, d)


@pytest.mark.parametrize("N", range(0, 5))
def test_krawtchouk_against_sympy(N):
    for n in range(N + 1):
        for x in range(N + 1):
            assert same(q_krawtchouk(n, x, P, N), sympy_krawtchouk(n, x, p, N))


def test_krawtchouk_examples():
    assert q_krawtchouk(0, 3, P, 4) == ONE
    assert q_krawtchouk(3, 0, P, 4) == ONE
    assert q_krawtchouk(1, 1, P, 1) == -P.inv()
    assert dual_q_krawtchouk(1, 1, P, 1) == -P.inv()
    assert dual_q_krawtchouk(2, 0, P, 3) == ONE
    assert dual_q_krawtchouk(0, 2, P, 3) == ONE


def test_not_symmetric_in_degree_and_argument():
    # worked by hand: K_1(q^-2; a, 2) = -q^-1/a but K_2(q^-1; a, 2) = -1/a
    assert q_krawtchouk(1, 2, P, 2) == -(P * Q).inv()
    assert q_krawtchouk(2, 1, P, 2) == -P.inv()


def test_boundary_value_at_x_equal_N():
    for N in range(1, 6):
        for n in range(N + 1):
            v = (-P).inv() ** n * q_power(n * (n - N))
            assert q_krawtchouk(n, N, P, N) == v


@pytest.mark.parametrize("N", range(0, 9))
def test_difference_equation(N):
    a = P * Q + ONE
    assert all(check_difference_equation(QKrawParams(n, x, a, N))
               for n in range(N + 1) for x in range(N + 1))


def test_printed_difference_equation_fails():
    # the (a - 1) middle coefficient is off by a sign; (1 - a) is what holds
    assert not printed_difference_equation_holds(QKrawParams(1, 1, P, 2))
    assert check_difference_equation(QKrawParams(1, 1, P, 2))


@pytest.mark.parametrize("N", range(1, 9))
def test_contiguous_relation(N):
    assert all(check_contiguous(n, x, P, N) for n in range(N + 1) for x in range(N + 1))


def test_contiguous_corner():
    # n = x = N = 1: lhs (1-q)(1+a/q)(-1/a), so the 0 * infinity corner must
    # contribute -(1+a)(a+q)(1-q)/(a q)
    from hecke_spheres.qseries import contiguous_sides
    lhs, rhs = contiguous_sides(1, 1, P, 1)
    assert same(lhs, "(1-q)*(1+p/q)*(-1/p)")
    assert lhs == rhs
    with pytest.raises(DomainError):
        check_contiguous(0, 0, P, 0)


def _classical(f, d, n):
    total = Fraction(0)
    for k in range(f + 1):
        num = sp.rf(-f, k) * sp.rf(-d, k)
        den = sp.rf(-n, k) * factorial(k)
        total += Fraction(int(num), int(den)) * 2 ** k
    return total


@pytest.mark.parametrize("N", range(0, 7))
def test_q_to_one_limit(N):
    for n in range(N + 1):
        for x in range(N + 1):
            assert classical_krawtchouk(n, x, N) == _classical(n, x, N)
            assert q_krawtchouk(n, x, ONE, N).specialize(1, 1) == _classical(n, x, N)


def test_classical_examples():
    assert classical_krawtchouk(0, 2, 3) == 1
    assert classical_krawtchouk(2, 0, 3) == 1
    assert classical_krawtchouk(1, 1, 1) == -1


def test_params_validation():
    with pytest.raises(DomainError):
        QKrawParams(3, 0, P, 2)
    with pytest.raises(DomainError):
        QKrawParams(0, 0, ZERO, 2)
