"""q-shifted factorials, q-binomials and the q-Krawtchouk polynomials.

The q-Krawtchouk polynomial used throughout the package is the terminating
series

    K_n(q^-x; a, N; q) = sum_k (q^-n;q)_k (q^-x;q)_k (-q^(n-N)/a;q)_k
                                / ((q^-N;q)_k (q;q)_k) * q^k

with the usual convention that a lower parameter q^-N is only allowed when an
upper parameter q^-d with d <= N truncates the sum first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .scalars import ONE, ZERO, Q, Scalar, ScalarLike, as_scalar, q_power

__all__ = [
    "QKrawParams",
    "q_pochhammer",
    "q_binomial",
    "q_krawtchouk",
    "dual_q_krawtchouk",
    "difference_equation_sides",
    "check_difference_equation",
    "printed_difference_equation_holds",
    "contiguous_sides",
    "check_contiguous",
    "classical_krawtchouk",
]


def q_pochhammer(a: ScalarLike, k: int) -> Scalar:
    """(a; q)_k = (1 - a)(1 - a q)...(1 - a q^(k-1))."""
    if k < 0:
        raise DomainError("q_pochhammer needs k >= 0")
    a = as_scalar(a)
    out = ONE
    for i in range(k):
        out = out * (ONE - a * q_power(i))
    return out


def q_binomial(n: int, d: int) -> Scalar:
    """Gaussian binomial [n d]_q = (q^n; q^-1)_d / (q; q)_d."""
    if d < 0 or d > n:
        raise DomainError(f"q_binomial needs 0 <= d <= n, got n={n}, d={d}")
    num = ONE
    for i in range(d):
        num = num * (ONE - q_power(n - i))
    return num / q_pochhammer(Q, d)


@dataclass(frozen=True)
class QKrawParams:
    """Degree ``n``, argument exponent ``x``, parameter ``a`` and lattice size ``N``."""

    n: int
    x: int
    a: Scalar
    N: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        if not (0 <= self.n <= self.N):
            raise DomainError(f"degree must satisfy 0 <= n <= N, got n={self.n}, N={self.N}")
        if not (0 <= self.x <= self.N):
            raise DomainError(f"argument must satisfy 0 <= x <= N, got x={self.x}, N={self.N}")
        if self.a.is_zero():
            raise DomainError("parameter a must be nonzero")


def _krawtchouk_sum(n: int, x: int, a: Scalar, N: int) -> Scalar:
    c = -q_power(n - N) / a
    total = ONE
    term = ONE
    for k in range(min(n, x)):
        term = term * (ONE - q_power(k - n)) * (ONE - q_power(k - x)) * (ONE - c * q_power(k))
        term = term / ((ONE - q_power(k - N)) * (ONE - q_power(k + 1))) * Q
        total = total + term
    return total


def q_krawtchouk(params: QKrawParams, *args) -> Scalar:
    """K_n(q^-x; a, N; q).

    Accepts either a :class:`QKrawParams` or the four values ``n, x, a, N``.
    """
    if not isinstance(params, QKrawParams):
        params = QKrawParams(params, *args)
    return _krawtchouk_sum(params.n, params.x, params.a, params.N)


def dual_q_krawtchouk(x: int, n: int, a: ScalarLike, N: int) -> Scalar:
    """R_n(q^-x - q^(x-N)/a; a, N; q), which equals K_x(q^-n; a, N; q)."""
    return q_krawtchouk(QKrawParams(x, n, a, N))


def difference_equation_sides(params: QKrawParams, *, printed: bool = False):
    """Both sides of the q-difference equation in the argument ``x``.

    The equation is

        (q^n - a q^(N-n)) K(x) = a q^x (1 - q^(N-x)) K(x+1)
                                 + q^x (1 - a) K(x) + (1 - q^x) K(x-1)

    with ``K(y) = K_n(q^-y; a, N; q)``.  ``printed=True`` uses the variant
    with ``q^x (a - 1)`` in the middle term instead, which does not hold.
    """
    n, x, a, N = params.n, params.x, params.a, params.N
    kx = _krawtchouk_sum(n, x, a, N)
    lhs = (q_power(n) - a * q_power(N - n)) * kx
    mid = (a - ONE) if printed else (ONE - a)
    rhs = q_power(x) * mid * kx
    if x < N:
        rhs = rhs + a * q_power(x) * (ONE - q_power(N - x)) * _krawtchouk_sum(n, x + 1, a, N)
    if x > 0:
        rhs = rhs + (ONE - q_power(x)) * _krawtchouk_sum(n, x - 1, a, N)
    return lhs, rhs


def check_difference_equation(params: QKrawParams, *args) -> bool:
    if not isinstance(params, QKrawParams):
        params = QKrawParams(params, *args)
    lhs, rhs = difference_equation_sides(params)
    return lhs == rhs


def printed_difference_equation_holds(params: QKrawParams) -> bool:
    lhs, rhs = difference_equation_sides(params, printed=True)
    return lhs == rhs


def contiguous_sides(n: int, x: int, a: ScalarLike, N: int):
    """Both sides of the contiguous relation lowering ``N`` by one.

    (1-q^N)(1+a q^(N-2n)) K_n(x; a, N)
        = (1-q^(N-n))(1+a q^(N-n)) K_n(x; a, N-1)
          + q^(N-n)(1-q^n)(1+a q^-n) K_(n-1)(x; a, N-1)

    K(x; a, N-1) at x = N is the polynomial continuation.  At n = N the
    first coefficient vanishes while the top term of K_N(x; a, N-1) has a
    vanishing denominator; the product is taken as its limit in the lattice
    parameter, which is the only surviving term (nonzero only for x = N).
    The n = 0 term of the second line carries (1-q^0) and is dropped.
    """
    params = QKrawParams(n, x, a, N)
    a = params.a
    if N < 1:
        raise DomainError(f"the contiguous relation needs N >= 1, got N={N}")
    lhs = (ONE - q_power(N)) * (ONE + a * q_power(N - 2 * n)) * _krawtchouk_sum(n, x, a, N)
    if n < N:
        rhs = (ONE - q_power(N - n)) * (ONE + a * q_power(N - n)) * _krawtchouk_sum(n, x, a, N - 1)
    else:
        rhs = _corner_limit(x, a, N)
    if n > 0:
        rhs = rhs + q_power(N - n) * (ONE - q_power(n)) * (ONE + a * q_power(-n)) \
            * _krawtchouk_sum(n - 1, x, a, N - 1)
    return lhs, rhs


def _corner_limit(x: int, a: Scalar, N: int) -> Scalar:
    """lim (1-q^(N-n))(1+a q^(N-n)) K_n(x; a, M) as q^-M -> q^(1-N), n = N."""
    num = q_pochhammer(q_power(-N), N) * q_pochhammer(q_power(-x), N) * q_pochhammer(-Q / a, N)
    den = q_pochhammer(q_power(1 - N), N - 1) * q_pochhammer(Q, N)
    return -(ONE + a) * num / den * q_power(N)


def check_contiguous(n: int, x: int, a: ScalarLike, N: int) -> bool:
    lhs, rhs = contiguous_sides(n, x, a, N)
    return lhs == rhs


def _rising(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a + i
    return out


def classical_krawtchouk(f: int, d: int, n: int) -> Fraction:
    """Ordinary Krawtchouk value sum_k (-f)_k (-d)_k / ((-n)_k k!) 2^k."""
    if not (0 <= f <= n and 0 <= d <= n):
        raise DomainError(f"need 0 <= f, d <= n, got f={f}, d={d}, n={n}")
    total = Fraction(0)
    for k in range(min(f, d) + 1):
        total += Fraction(_rising(-f, k) * _rising(-d, k) * 2 ** k,
                          _rising(-n, k) * factorial(k))
    return total
