"""The induced module V_n and its commutative algebra structure.

V_n is induced from the index representation of the type-A subalgebra.  It
has dimension 2^n with basis ``u(x) = T_(u_x) (x) 1`` indexed by sign vectors.
Two rescaled bases are also supported:

    uhat(x) = iota(T_(u_x))^(-1/2) u(x)     (orthonormal for B)
    v(x)    = iota(T_(u_x))^(-1)   u(x)     (dual to u(x) under B)

Vectors are dense lists of 2^n Scalars in bitmask order plus a basis tag.
The product is driven by the relations of the generators u(x^j):
distinct generators multiply to u(x^j x^k), and

    u(x^j)^2 = (q-1) u(x^j) sum_(l>j) u(x^l) + (p-1) u(x^j) + p q^(n-j) u(1).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence

from .coxeter import SignVector, all_sign_vectors, coset_rep
from .errors import DomainError, RankMismatch
from .hecke import HeckeElt, index_rep, symmetrizer_apply
from .scalars import ONE, P, Q, ZERO, Scalar, ScalarLike, as_scalar, poincare_a, q_power

__all__ = [
    "BASES",
    "VElt",
    "iota_u",
    "iota_u_half",
    "act_gen",
    "act_hecke",
    "mult_generator",
    "basis_product",
    "product",
    "product_via_hecke",
    "tau",
    "bilinear_B",
    "symmetrize",
    "generator_sum",
]

BASES = ("u", "uhat", "v")


@lru_cache(maxsize=None)
def _iota_exponents(n: int, bits: int):
    x = SignVector(n, bits)
    w = x.weight
    return w, n * w - sum(x.positions)


def iota_u(x: SignVector) -> Scalar:
    """iota(T_(u_x)) = p^w(x) q^(n w(x) - sum of positions)."""
    a, b = _iota_exponents(x.n, x.bits)
    return Scalar.monomial(2 * a, 2 * b)


def iota_u_half(x: SignVector) -> Scalar:
    a, b = _iota_exponents(x.n, x.bits)
    return Scalar.monomial(a, b)


def _factor_to_u(n: int, bits: int, basis: str) -> Scalar:
    a, b = _iota_exponents(n, bits)
    if basis == "u":
        return ONE
    if basis == "uhat":
        return Scalar.monomial(-a, -b)
    return Scalar.monomial(-2 * a, -2 * b)


class VElt:
    """Vector in V_n in one of the bases ``u``, ``uhat``, ``v``."""

    __slots__ = ("n", "coords", "basis")

    def __init__(self, n: int, coords: Optional[Sequence[ScalarLike]] = None, basis: str = "u"):
        if basis not in BASES:
            raise DomainError(f"basis must be one of {BASES}, got {basis!r}")
        if n < 1:
            raise DomainError("rank must be positive")
        dim = 1 << n
        if coords is None:
            coords = [ZERO] * dim
        elif len(coords) != dim:
            raise RankMismatch(f"expected {dim} coordinates, got {len(coords)}")
        self.n = n
        self.coords = [as_scalar(c) for c in coords]
        self.basis = basis

    @classmethod
    def basis_vector(cls, x: SignVector, basis: str = "u") -> "VElt":
        out = cls(x.n, basis=basis)
        out.coords[x.bits] = ONE
        return out

    @classmethod
    def one(cls, n: int) -> "VElt":
        return cls.basis_vector(SignVector.ones(n))

    @classmethod
    def from_dict(cls, n: int, data: Dict[SignVector, ScalarLike], basis: str = "u") -> "VElt":
        out = cls(n, basis=basis)
        for x, c in data.items():
            out.coords[x.bits] = out.coords[x.bits] + as_scalar(c)
        return out

    def to_basis(self, basis: str) -> "VElt":
        if basis not in BASES:
            raise DomainError(f"basis must be one of {BASES}, got {basis!r}")
        if basis == self.basis:
            return self
        n = self.n
        coords = []
        for bits, c in enumerate(self.coords):
            if c.is_zero():
                coords.append(ZERO)
                continue
            c = c * _factor_to_u(n, bits, self.basis)
            coords.append(c / _factor_to_u(n, bits, basis))
        return VElt(n, coords, basis)

    def u(self) -> "VElt":
        return self.to_basis("u")

    def _check(self, other: "VElt") -> None:
        if other.n != self.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")

    def __add__(self, other: "VElt") -> "VElt":
        self._check(other)
        other = other.to_basis(self.basis)
        return VElt(self.n, [a + b for a, b in zip(self.coords, other.coords)], self.basis)

    def __sub__(self, other: "VElt") -> "VElt":
        return self + other.scale(-1)

    def __neg__(self) -> "VElt":
        return self.scale(-1)

    def scale(self, c: ScalarLike) -> "VElt":
        c = as_scalar(c)
        return VElt(self.n, [c * a for a in self.coords], self.basis)

    def __mul__(self, other):
        if isinstance(other, VElt):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VElt) or other.n != self.n:
            return False
        return self.coords == other.to_basis(self.basis).coords

    def __hash__(self):
        return hash((self.n, tuple(self.u().coords)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def coeff(self, x: SignVector) -> Scalar:
        return self.coords[x.bits]

    def support(self) -> List[SignVector]:
        return [SignVector(self.n, b) for b, c in enumerate(self.coords) if not c.is_zero()]

    def to_json(self) -> dict:
        return {"n": self.n, "basis": self.basis, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "VElt":
        return cls(int(data["n"]), [Scalar.parse(c) for c in data["coords"]], data["basis"])

    def __repr__(self) -> str:
        terms = [f"({c})*{self.basis}({SignVector(self.n, b)})"
                 for b, c in enumerate(self.coords) if not c.is_zero()]
        return f"VElt(n={self.n}: {' + '.join(terms) or '0'})"


def _act_gen_u(i: int, n: int, coords: List[Scalar]) -> List[Scalar]:
    out = [ZERO] * len(coords)
    if i == n:
        mask = 1 << (n - 1)
        for bits, a in enumerate(coords):
            if a.is_zero():
                continue
            if bits & mask:
                out[bits] = out[bits] + (P - ONE) * a
                out[bits ^ mask] = out[bits ^ mask] + P * a
            else:
                out[bits ^ mask] = out[bits ^ mask] + a
        return out
    lo, hi = 1 << (i - 1), 1 << i
    for bits, a in enumerate(coords):
        if a.is_zero():
            continue
        neg_i, neg_next = bool(bits & lo), bool(bits & hi)
        if neg_i == neg_next:
            out[bits] = out[bits] + Q * a
        elif neg_next:
            # x_i = 1, x_(i+1) = -1
            sw = bits ^ (lo | hi)
            out[sw] = out[sw] + a
        else:
            sw = bits ^ (lo | hi)
            out[bits] = out[bits] + (Q - ONE) * a
            out[sw] = out[sw] + Q * a
    return out


def act_gen(i: int, v: VElt) -> VElt:
    """rho(T_i) v."""
    n = v.n
    if not 1 <= i <= n:
        raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
    coords = _act_gen_u(i, n, v.u().coords)
    return VElt(n, coords, "u").to_basis(v.basis)


def act_hecke(a: HeckeElt, v: VElt) -> VElt:
    """rho(a) v."""
    if a.n != v.n:
        raise RankMismatch(f"ranks differ: {a.n} vs {v.n}")
    n = v.n
    base = v.u().coords
    total = [ZERO] * len(base)
    for w, c in a.terms.items():
        cur = base
        for i in reversed(w.reduced_word()):
            cur = _act_gen_u(i, n, cur)
        total = [t + c * x for t, x in zip(total, cur)]
    return VElt(n, total, "u").to_basis(v.basis)


@lru_cache(maxsize=None)
def _mult_gen_basis(n: int, j: int, bits: int) -> Dict[int, Scalar]:
    """u(x^j) u(y) as {bitmask: coefficient}."""
    mask = 1 << (j - 1)
    if not bits & mask:
        return {bits | mask: ONE}
    out: Dict[int, Scalar] = {}

    def add(b, c):
        s = out.get(b, ZERO) + c
        if s.is_zero():
            out.pop(b, None)
        else:
            out[b] = s

    # u(x^j) u(y) = u(x^j)^2 u(y x^j)
    qm1 = Q - ONE
    for l in range(j + 1, n + 1):
        for b, c in _mult_gen_basis(n, l, bits).items():
            add(b, qm1 * c)
    add(bits, P - ONE)
    add(bits ^ mask, P * q_power(n - j))
    return out


def mult_generator(j: int, v: VElt) -> VElt:
    """u(x^j) * v."""
    n = v.n
    if not 1 <= j <= n:
        raise DomainError(f"need 1 <= j <= n, got j={j}, n={n}")
    out = [ZERO] * (1 << n)
    for bits, a in enumerate(v.u().coords):
        if a.is_zero():
            continue
        for b, c in _mult_gen_basis(n, j, bits).items():
            out[b] = out[b] + a * c
    return VElt(n, out, "u")


@lru_cache(maxsize=None)
def _basis_product(n: int, xbits: int, ybits: int) -> Dict[int, Scalar]:
    if xbits == 0:
        return {ybits: ONE}
    if ybits < xbits:
        return _basis_product(n, ybits, xbits)
    low = xbits & -xbits
    j = low.bit_length()
    rest = _basis_product(n, xbits ^ low, ybits)
    out: Dict[int, Scalar] = {}
    for b, c in rest.items():
        for b2, c2 in _mult_gen_basis(n, j, b).items():
            s = out.get(b2, ZERO) + c * c2
            if s.is_zero():
                out.pop(b2, None)
            else:
                out[b2] = s
    return out


def basis_product(x: SignVector, y: SignVector) -> VElt:
    """u(x) u(y), with u(x) = u(x^(i_1)) ... u(x^(i_w))."""
    if x.n != y.n:
        raise RankMismatch(f"ranks differ: {x.n} vs {y.n}")
    out = VElt(x.n)
    for b, c in _basis_product(x.n, x.bits, y.bits).items():
        out.coords[b] = c
    return out


def product(v1: VElt, v2: VElt) -> VElt:
    """The commutative product on V_n, returned in the u basis."""
    v1._check(v2)
    n = v1.n
    a, b = v1.u().coords, v2.u().coords
    out = [ZERO] * (1 << n)
    for xb, ca in enumerate(a):
        if ca.is_zero():
            continue
        for yb, cb in enumerate(b):
            if cb.is_zero():
                continue
            cab = ca * cb
            for zb, c in _basis_product(n, xb, yb).items():
                out[zb] = out[zb] + cab * c
    return VElt(n, out, "u")


def product_via_hecke(x: SignVector, y: SignVector) -> VElt:
    """u(x) u(y) = q^(-l(sigma_x) - l(sigma_y)) rho(T_x T_y) u(1), the defining formula.

    Independent of the generator relations; meant as an oracle for small n.
    """
    n = x.n
    tx = HeckeElt.basis(x.as_perm())
    ty = HeckeElt.basis(y.as_perm())
    shift = coset_rep(x).length_sigma + coset_rep(y).length_sigma
    return act_hecke(tx * ty, VElt.one(n)).scale(q_power(-shift))


def tau(v: VElt) -> Scalar:
    """The u(1, ..., 1) coordinate in the u basis."""
    return v.u().coords[0]


def bilinear_B(v1: VElt, v2: VElt) -> Scalar:
    """B(v1, v2) = tau(v1 v2)."""
    return tau(product(v1, v2))


def _act_gen_sparse(i: int, n: int, vec: Dict[int, Scalar]) -> Dict[int, Scalar]:
    out: Dict[int, Scalar] = {}

    def add(b, c):
        s = out.get(b)
        out[b] = c if s is None else s + c

    if i == n:
        mask = 1 << (n - 1)
        for bits, a in vec.items():
            if bits & mask:
                add(bits, (P - ONE) * a)
                add(bits ^ mask, P * a)
            else:
                add(bits ^ mask, a)
    else:
        lo, hi = 1 << (i - 1), 1 << i
        for bits, a in vec.items():
            neg_i, neg_next = bool(bits & lo), bool(bits & hi)
            if neg_i == neg_next:
                add(bits, Q * a)
            elif neg_next:
                add(bits ^ (lo | hi), a)
            else:
                add(bits, (Q - ONE) * a)
                add(bits ^ (lo | hi), Q * a)
    return {b: c for b, c in out.items() if not c.is_zero()}


def _add_sparse(a: Dict[int, Scalar], b: Dict[int, Scalar]) -> Dict[int, Scalar]:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        out[k] = v if s is None else s + v
    return out


def symmetrize(v: VElt) -> VElt:
    """rho(P) v = P_A(q)^-1 sum_sigma rho(T_sigma) v, in the basis of ``v``.

    Genuine sum over all n! permutations (depth first, shared prefixes).
    """
    n = v.n
    start = {b: c for b, c in enumerate(v.u().coords) if not c.is_zero()}
    total = symmetrizer_apply(n, start, lambda i, c: _act_gen_sparse(i, n, c), _add_sparse)
    norm = poincare_a(n).inv()
    coords = [ZERO] * (1 << n)
    for b, c in total.items():
        coords[b] = c * norm
    return VElt(n, coords, "u").to_basis(v.basis)


def generator_sum(n: int) -> VElt:
    """sum_i u(x^i)."""
    out = VElt(n)
    for j in range(1, n + 1):
        out.coords[1 << (j - 1)] = ONE
    return out
