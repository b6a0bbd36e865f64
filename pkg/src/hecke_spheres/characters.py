"""Characters of V_n, the Fourier transform and the contragredient action.

The algebra V_n is commutative and its characters are indexed by y in Z_2^n:

    chi_y(u(x^j)) = p q^(m_j(y))             if y_j = 1,
                  = -q^(n - j - m_j(y))      if y_j = -1,

extended multiplicatively along u(x) = u(x^(i_1)) ... u(x^(i_w)).  Elements
of the dual space are stored as coefficient maps on the chi_y basis.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence

from .coxeter import SignVector, all_sign_vectors
from .errors import DomainError, NotDiagonal, RankMismatch
from .hecke import HeckeElt
from .scalars import ONE, P, Q, ZERO, Scalar, ScalarLike, as_scalar, p_power, q_power
from .vmodule import VElt, iota_u, product

__all__ = [
    "DualElt",
    "char_on_generator",
    "char_value",
    "eval_char",
    "weight_h",
    "fourier",
    "inverse_fourier",
    "xi",
    "convolve",
    "functional_to_dual",
    "tau_dual",
    "rho_star_gen",
    "rho_star0_gen",
    "rho_star_hecke",
    "rho_star_diagonal_on_Tx",
    "character_table",
]


class DualElt:
    """Element sum_y c_y chi_y of the dual of V_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Optional[Mapping[SignVector, ScalarLike]] = None):
        self.n = n
        clean: Dict[SignVector, Scalar] = {}
        for y, c in (coeffs or {}).items():
            if y.n != n:
                raise RankMismatch(f"character index {y} does not have rank {n}")
            c = as_scalar(c)
            if not c.is_zero():
                clean[y] = c
        self.coeffs = clean

    @classmethod
    def char(cls, y: SignVector) -> "DualElt":
        return cls(y.n, {y: ONE})

    def _check(self, other) -> None:
        if other.n != self.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")

    def __add__(self, other: "DualElt") -> "DualElt":
        self._check(other)
        out = dict(self.coeffs)
        for y, c in other.coeffs.items():
            out[y] = out.get(y, ZERO) + c
        return DualElt(self.n, out)

    def __sub__(self, other: "DualElt") -> "DualElt":
        return self + other.scale(-1)

    def scale(self, c: ScalarLike) -> "DualElt":
        c = as_scalar(c)
        return DualElt(self.n, {y: c * v for y, v in self.coeffs.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, DualElt) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, y: SignVector) -> Scalar:
        return self.coeffs.get(y, ZERO)

    def __call__(self, v: VElt) -> Scalar:
        self._check(v)
        total = ZERO
        for y, c in self.coeffs.items():
            total = total + c * eval_char(y, v)
        return total

    def values_on_u(self) -> List[Scalar]:
        """The functional on u(x), x in bitmask order."""
        out = []
        for xb in range(1 << self.n):
            total = ZERO
            for y, c in self.coeffs.items():
                total = total + c * char_value(self.n, y.bits, xb)
            out.append(total)
        return out

    def to_json(self) -> dict:
        return {"n": self.n,
                "coeffs": {str(y): str(self.coeffs[y]) for y in sorted(self.coeffs)}}

    def __repr__(self) -> str:
        body = " + ".join(f"({self.coeffs[y]})*chi[{y}]" for y in sorted(self.coeffs)) or "0"
        return f"DualElt(n={self.n}: {body})"


def char_on_generator(y: SignVector, j: int) -> Scalar:
    """chi_y(u(x^j))."""
    n = y.n
    if not 1 <= j <= n:
        raise DomainError(f"need 1 <= j <= n, got j={j}, n={n}")
    m = y.m(j)
    if y[j] == 1:
        return P * q_power(m)
    return -q_power(n - j - m)


@lru_cache(maxsize=None)
def char_value(n: int, ybits: int, xbits: int) -> Scalar:
    """chi_y(u(x)) as a product over the positions of x."""
    y = SignVector(n, ybits)
    out = ONE
    for j in SignVector(n, xbits).positions:
        out = out * char_on_generator(y, j)
    return out


def eval_char(y: SignVector, v: VElt) -> Scalar:
    if y.n != v.n:
        raise RankMismatch(f"ranks differ: {y.n} vs {v.n}")
    total = ZERO
    for xb, c in enumerate(v.u().coords):
        if not c.is_zero():
            total = total + c * char_value(y.n, y.bits, xb)
    return total


@lru_cache(maxsize=None)
def _weight_h(n: int, bits: int) -> Scalar:
    y = SignVector(n, bits)
    out = ONE
    for j in range(1, n + 1):
        t = P * q_power(2 * y.m(j) + j - n)
        out = out * (ONE + (t if y[j] == 1 else t.inv()))
    return out


def weight_h(y: SignVector) -> Scalar:
    """h_y = prod_j (1 + (p q^(2 m_j(y) + j - n))^(y_j))."""
    return _weight_h(y.n, y.bits)


def fourier(d: DualElt) -> VElt:
    """The element xi with B(v, xi) = d(v); xi = sum_x d(u(x)) v(x)."""
    vals = d.values_on_u()
    n = d.n
    coords = [c / iota_u(SignVector(n, xb)) if not c.is_zero() else ZERO
              for xb, c in enumerate(vals)]
    return VElt(n, coords, "u")


def xi(y: SignVector) -> VElt:
    return fourier(DualElt.char(y))


def inverse_fourier(v: VElt) -> DualElt:
    """Inverse of :func:`fourier`: sum_y chi_y(v) h_y^-1 chi_y."""
    return DualElt(v.n, {y: eval_char(y, v) / weight_h(y) for y in all_sign_vectors(v.n)})


def functional_to_dual(n: int, values: Sequence[ScalarLike]) -> DualElt:
    """The dual element with the given values on u(x), x in bitmask order.

    Uses psi = sum_y psi(xi_y) h_y^-1 chi_y.
    """
    if len(values) != 1 << n:
        raise RankMismatch(f"expected {1 << n} values, got {len(values)}")
    values = [as_scalar(v) for v in values]
    out = {}
    for y in all_sign_vectors(n):
        xi_y = xi(y).coords
        s = ZERO
        for xb, c in enumerate(xi_y):
            if not c.is_zero() and not values[xb].is_zero():
                s = s + c * values[xb]
        out[y] = s / weight_h(y)
    return DualElt(n, out)


def convolve(d1: DualElt, d2: DualElt) -> DualElt:
    """d1 * d2 = b^-1(b(d1) b(d2))."""
    d1._check(d2)
    return inverse_fourier(product(fourier(d1), fourier(d2)))


def tau_dual(n: int) -> DualElt:
    """sum_y h_y^-1 chi_y, the identity of the convolution algebra."""
    return DualElt(n, {y: weight_h(y).inv() for y in all_sign_vectors(n)})


def _gen_image(i: int, y: SignVector) -> Dict[SignVector, Scalar]:
    n = y.n
    if i == n:
        return {y: P if y[n] == 1 else -ONE}
    if y[i] == y[i + 1]:
        return {y: Q}
    m = y.m(i)
    mix = P * q_power(m) + q_power(n - i - m)
    if y[i] == 1:
        den = P * q_power(m) + q_power(n - i - 1 - m)
        diag = P * q_power(m) * (Q - ONE) / den
    else:
        den = P * q_power(m - 1) + q_power(n - i - m)
        diag = q_power(n - i - m) * (Q - ONE) / den
    return {y: diag, y.swap(i): mix / den}


def rho_star_gen(i: int, d: DualElt) -> DualElt:
    """rho*(T_i) d, with (rho*(T) chi)(v) = chi(rho(T*) v)."""
    n = d.n
    if not 1 <= i <= n:
        raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
    out: Dict[SignVector, Scalar] = {}
    for y, c in d.coeffs.items():
        for z, a in _gen_image(i, y).items():
            out[z] = out.get(z, ZERO) + c * a
    return DualElt(n, out)


def rho_star0_gen(i: int, d: DualElt) -> DualElt:
    """Action through the second star: rho*(T_i^-1) d."""
    c = (P if i == d.n else Q).inv()
    return rho_star_gen(i, d).scale(c) + d.scale(c - ONE)


def rho_star_hecke(a: HeckeElt, d: DualElt) -> DualElt:
    """rho*(a) d; generators of a reduced word act right to left."""
    if a.n != d.n:
        raise RankMismatch(f"ranks differ: {a.n} vs {d.n}")
    total = DualElt(d.n)
    for w, c in a.terms.items():
        cur = d
        for i in reversed(w.reduced_word()):
            cur = rho_star_gen(i, cur)
        total = total + cur.scale(c)
    return total


def rho_star_diagonal_on_Tx(x: SignVector, y: SignVector) -> Scalar:
    """Eigenvalue of rho*(T_x) on chi_y; raises NotDiagonal if chi_y is not an eigenvector."""
    if x.n != y.n:
        raise RankMismatch(f"ranks differ: {x.n} vs {y.n}")
    res = rho_star_hecke(HeckeElt.basis(x.as_perm()), DualElt.char(y))
    extra = [z for z in res.coeffs if z != y]
    if extra:
        raise NotDiagonal(f"rho*(T_x) chi_y has components on {[str(z) for z in extra]} "
                          f"for x={x}, y={y}")
    return res.coeff(y)


def character_table(n: int) -> List[List[Scalar]]:
    """Rows y, columns x (both in bitmask order), entries chi_y(u(x))."""
    return [[char_value(n, yb, xb) for xb in range(1 << n)] for yb in range(1 << n)]
