"""Invariant elements, zonal spherical functions and their q-Krawtchouk form.

The F_n-invariant part of V_n has the basis

    w_d = rho(P) v(1, ..., 1, -1, ..., -1)        (d trailing minus signs)

and the F_n-invariant part of the dual has the basis phi_f, f = 0..n, where
phi_f(w_d) = chi_y(w_d) for any y of weight f.  Three independent routes to
the table phi_f(w_d) are provided: character evaluation on genuinely
symmetrized w_d, the three-term recurrence in d, and the 3phi2 sum.  They
agree with

    phi_f(w_d) = K_f(q^-d; p, n; q).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .characters import (DualElt, convolve, eval_char, rho_star_hecke, weight_h)
from .coxeter import SignVector, all_sign_vectors
from .errors import DomainError, IdentityFailure
from .hecke import check_cap, symmetrizer
from .qgroup import UqElt, UqGen, apply_t, eigen_operator, t_star
from .qseries import QKrawParams, classical_krawtchouk, q_binomial, q_krawtchouk, q_pochhammer
from .report import Report
from .scalars import (ONE, P, P_HALF, Q, Q_HALF, ZERO, Scalar, as_scalar, p_power,
                      poincare_a, q_integer, q_power)
from .vmodule import (VElt, bilinear_B, generator_sum, product, symmetrize, tau)

__all__ = [
    "InvariantBasis",
    "SphericalTable",
    "build_invariant_basis",
    "invariant_norm",
    "efk_coefficient",
    "act_efk",
    "phi_eval",
    "phi_table_eval",
    "phi_via_recurrence",
    "krawtchouk_table",
    "identify_krawtchouk",
    "weight_Hf",
    "orthogonality_Hf",
    "phi_dual",
    "phi_dual_via_symmetrization",
    "eigenvalue",
    "eigen_operator_check",
    "phi_convolution_check",
    "product_coeffs",
    "product_coeffs_check",
    "laplace_identity_check",
    "lemma_product_check",
    "homomorphism_check",
    "boundary_value",
    "printed_boundary_value",
    "LieType",
    "lie_type_preset",
    "classical_limit_check",
]


@dataclass(frozen=True)
class InvariantBasis:
    n: int
    w: Tuple[VElt, ...]


@lru_cache(maxsize=None)
def _invariant_basis(n: int) -> InvariantBasis:
    check_cap(n, "invariant basis")
    w = tuple(symmetrize(VElt.basis_vector(SignVector.trailing(n, d), "v")).u()
              for d in range(n + 1))
    return InvariantBasis(n, w)


def build_invariant_basis(n: int, *, check_representatives: bool = False) -> InvariantBasis:
    """w_0, ..., w_n by n!-term Hecke symmetrization of v(1..1, -1..-1).

    With ``check_representatives`` every v(x) is symmetrized as well and
    compared with w_(w(x)); IdentityFailure is raised on a mismatch.
    """
    if n < 1:
        raise DomainError("rank must be positive")
    basis = _invariant_basis(n)
    if check_representatives:
        for x in all_sign_vectors(n):
            got = symmetrize(VElt.basis_vector(x, "v"))
            if got != basis.w[x.weight]:
                raise IdentityFailure(f"rho(P) v({x}) differs from w_{x.weight}")
    return basis


def invariant_norm(n: int, d: int) -> Scalar:
    """B(w_d, w_d) = p^-d q^(-d(d-1)/2) [n d]_q^-1."""
    return p_power(-d) * q_power(-(d * (d - 1) // 2)) / q_binomial(n, d)


def efk_coefficient(g: UqGen, n: int, d: int) -> Tuple[int, Scalar]:
    """(target index e, c) with t(g) w_d = c w_e."""
    g = UqGen(g)
    if g is UqGen.K:
        return d, Scalar.monomial(0, 2 * d - n)
    if g is UqGen.KINV:
        return d, Scalar.monomial(0, n - 2 * d)
    if g is UqGen.E:
        if d == n:
            return n, ZERO
        return d + 1, P_HALF * Scalar.monomial(0, 1 - n + 2 * d) * q_integer(n - d)
    if d == 0:
        return 0, ZERO
    return d - 1, P_HALF.inv() * q_power(1 - d) * q_integer(d)


def act_efk(g: UqGen, basis: InvariantBasis, d: int) -> VElt:
    """t(g) w_d, checked against the closed form (IdentityFailure on mismatch)."""
    n = basis.n
    if not 0 <= d <= n:
        raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
    got = apply_t(UqElt.gen(g), basis.w[d]).u()
    e, c = efk_coefficient(g, n, d)
    expected = basis.w[e].scale(c)
    if got != expected:
        raise IdentityFailure(f"t({UqGen(g).value}) w_{d} does not match its closed form")
    return got


def phi_eval(f: int, d: int, n: int, *, check_all: bool = False) -> Scalar:
    """chi_y(w_d) for y = (-1, ..., -1, 1, ..., 1) of weight f.

    ``check_all`` evaluates every y of weight f and raises IdentityFailure if
    the values differ.
    """
    if not (0 <= f <= n and 0 <= d <= n):
        raise DomainError(f"need 0 <= f, d <= n, got f={f}, d={d}, n={n}")
    w = _invariant_basis(n).w[d]
    y0 = SignVector(n, (1 << f) - 1)
    value = eval_char(y0, w)
    if check_all:
        for y in all_sign_vectors(n):
            if y.weight == f and eval_char(y, w) != value:
                raise IdentityFailure(f"chi_{y}(w_{d}) differs from chi_{y0}(w_{d})")
    return value


@dataclass(frozen=True)
class SphericalTable:
    n: int
    values: Tuple[Tuple[Scalar, ...], ...]

    def __getitem__(self, fd: Tuple[int, int]) -> Scalar:
        f, d = fd
        return self.values[f][d]

    def to_json(self) -> dict:
        return {"n": self.n,
                "rows": [{"f": f, "values": [str(v) for v in row]}
                         for f, row in enumerate(self.values)]}

    def specialize(self, p_half=None, q_half=None, *, p=None, q=None) -> List[List[Fraction]]:
        return [[v.specialize(p_half, q_half, p=p, q=q) for v in row] for row in self.values]


def phi_table_eval(n: int, *, check_all: bool = False) -> SphericalTable:
    return SphericalTable(n, tuple(tuple(phi_eval(f, d, n, check_all=check_all)
                                         for d in range(n + 1)) for f in range(n + 1)))


def phi_via_recurrence(n: int) -> SphericalTable:
    """Solve the three-term recurrence forward in d from phi_f(w_0) = 1.

    (p(1-q^(n-f)) - (1-q^f)) phi(d) = p q^d (1-q^(n-d)) phi(d+1)
                                      + (1-q^d)(p-1) phi(d) + (1-q^d) phi(d-1)
    """
    if n < 0:
        raise DomainError("rank must be nonnegative")
    rows = []
    for f in range(n + 1):
        lam = P * (ONE - q_power(n - f)) - (ONE - q_power(f))
        phi = [ONE]
        for d in range(n):
            rest = (lam - (ONE - q_power(d)) * (P - ONE)) * phi[d]
            if d > 0:
                rest = rest - (ONE - q_power(d)) * phi[d - 1]
            phi.append(rest / (P * q_power(d) * (ONE - q_power(n - d))))
        rows.append(tuple(phi))
    return SphericalTable(n, tuple(rows))


def krawtchouk_table(n: int) -> SphericalTable:
    return SphericalTable(n, tuple(tuple(q_krawtchouk(QKrawParams(f, d, P, n))
                                         for d in range(n + 1)) for f in range(n + 1)))


def boundary_value(f: int, n: int) -> Scalar:
    """phi_f(w_n) = (-p)^-f q^(f(f-n)), the value fixed by the n = f = 1 case."""
    v = p_power(-f) * q_power(f * (f - n))
    return -v if f % 2 else v


def printed_boundary_value(f: int, n: int) -> Scalar:
    """(-p)^(f-n) q^(f(f-n)), the other candidate; wrong already at f = 0, n = 1."""
    v = p_power(f - n) * q_power(f * (f - n))
    return -v if (f - n) % 2 else v


def identify_krawtchouk(n: int) -> Report:
    """Entrywise agreement of the three routes to phi_f(w_d)."""
    rep = Report(f"krawtchouk n={n}")
    ev = phi_table_eval(n)
    rec = phi_via_recurrence(n)
    kr = krawtchouk_table(n)
    for f in range(n + 1):
        for d in range(n + 1):
            a, b, c = ev[f, d], rec[f, d], kr[f, d]
            rep.add(f"phi_{f}(w_{d}) eval = recurrence = K_{f}(q^-{d};p,{n})",
                    a == b == c, f"eval={a}; recurrence={b}; 3phi2={c}")
    for f in range(n + 1):
        rep.add(f"phi_{f}(w_{n}) = (-p)^-f q^(f(f-n))", ev[f, n] == boundary_value(f, n),
                f"got {ev[f, n]}, expected {boundary_value(f, n)}")
    return rep


def weight_Hf(f: int, n: int) -> Scalar:
    """H_f = [n f]^-1 (-p q^-f; q)_(n+1) / (p q^(n-f) + q^f) q^(f(f+1)/2) p^-f."""
    if not 0 <= f <= n:
        raise DomainError(f"need 0 <= f <= n, got f={f}, n={n}")
    poch = q_pochhammer(-P * q_power(-f), n + 1)
    return poch / (q_binomial(n, f) * (P * q_power(n - f) + q_power(f))) \
        * q_power(f * (f + 1) // 2) * p_power(-f)


def _h_sum_inverse(f: int, n: int) -> Scalar:
    total = ZERO
    for y in all_sign_vectors(n):
        if y.weight == f:
            total = total + weight_h(y).inv()
    return total.inv()


def orthogonality_Hf(n: int, table: Optional[SphericalTable] = None) -> Report:
    """Both orthogonality systems for phi_f(w_d) and the two forms of H_f."""
    table = table or phi_via_recurrence(n)
    rep = Report(f"spherical orthogonality n={n}")
    H = [weight_Hf(f, n) for f in range(n + 1)]
    wts = [p_power(d) * q_power(d * (d - 1) // 2) * q_binomial(n, d) for d in range(n + 1)]
    for f in range(n + 1):
        hs = _h_sum_inverse(f, n)
        rep.add(f"H_{f} closed form = (sum_(w(y)={f}) 1/h_y)^-1", H[f] == hs,
                f"closed={H[f]}; sum={hs}")
    rep.add("H_0 = (-p;q)_n", H[0] == q_pochhammer(-P, n), str(H[0]))
    rep.add("H_n = (-1/p;q)_n", H[n] == q_pochhammer(-P.inv(), n), str(H[n]))
    for f in range(n + 1):
        for g in range(f, n + 1):
            s = ZERO
            for d in range(n + 1):
                s = s + wts[d] * table[g, d] * table[f, d]
            exp = H[f] if f == g else ZERO
            rep.add(f"sum_d weight(d) phi_{g} phi_{f} = delta H_{f}", s == exp, f"got {s}")
    for d in range(n + 1):
        for e in range(d, n + 1):
            s = ZERO
            for f in range(n + 1):
                s = s + table[f, e] * table[f, d] / H[f]
            exp = wts[d].inv() if d == e else ZERO
            rep.add(f"sum_f phi_f(w_{e}) phi_f(w_{d}) / H_f = delta / weight({d})",
                    s == exp, f"got {s}")
    return rep


def phi_dual(f: int, n: int) -> DualElt:
    """phi_f = H_f sum_(w(y)=f) h_y^-1 chi_y."""
    H = weight_Hf(f, n)
    return DualElt(n, {y: H / weight_h(y) for y in all_sign_vectors(n) if y.weight == f})


def phi_dual_via_symmetrization(f: int, n: int) -> DualElt:
    """rho*(P) chi_y with y of weight f, P the normalized symmetrizer."""
    check_cap(n)
    y = SignVector(n, (1 << f) - 1)
    Psum = symmetrizer(n)
    return rho_star_hecke(Psum, DualElt.char(y)).scale(poincare_a(n).inv())


def eigenvalue(f: int, n: int) -> Scalar:
    """(p^(1/2) q^(n/2-f) - p^(-1/2) q^(f-n/2) + p^(-1/2) - p^(1/2)) / (q^(1/2) - q^(-1/2))."""
    Pi = P_HALF.inv()
    num = P_HALF * Scalar.monomial(0, n - 2 * f) - Pi * Scalar.monomial(0, 2 * f - n) + Pi - P_HALF
    return num / (Q_HALF - Q_HALF.inv())


def eigen_operator_check(n: int) -> Report:
    rep = Report(f"eigen operator n={n}")
    X = eigen_operator()
    for f in range(n + 1):
        phi = phi_dual(f, n)
        lhs = t_star(X, phi)
        rhs = phi.scale(eigenvalue(f, n))
        rep.add(f"t*(X) phi_{f} = lambda_{f} phi_{f}", lhs == rhs, f"lhs={lhs}")
    return rep


def phi_convolution_check(n: int) -> Report:
    rep = Report(f"phi convolution n={n}")
    phis = [phi_dual(f, n) for f in range(n + 1)]
    for f in range(n + 1):
        for g in range(f, n + 1):
            got = convolve(phis[f], phis[g])
            exp = phis[f].scale(weight_Hf(f, n)) if f == g else DualElt(n)
            rep.add(f"phi_{f} * phi_{g} = delta H_{f} phi_{f}", got == exp, repr(got))
    return rep


def product_coeffs(k: int, d: int, n: int) -> List[Scalar]:
    """c_l(k, d) = tau(w_k w_d w_l) / B(w_l, w_l), l = 0..n."""
    w = _invariant_basis(n).w
    kd = product(w[k], w[d])
    return [tau(product(kd, w[l])) / bilinear_B(w[l], w[l]) for l in range(n + 1)]


def product_coeffs_check(n: int, table: Optional[SphericalTable] = None) -> Report:
    """Linearization, symmetry, the k = 0 row and the k = 1 row against the recurrence."""
    rep = Report(f"product coefficients n={n}")
    table = table or phi_via_recurrence(n)
    w = _invariant_basis(n).w
    norms = [bilinear_B(w[l], w[l]) for l in range(n + 1)]
    coeffs = {(k, d): product_coeffs(k, d, n) for k in range(n + 1) for d in range(n + 1)}
    for (k, d), c in coeffs.items():
        for f in range(n + 1):
            lhs = table[f, k] * table[f, d]
            rhs = ZERO
            for l in range(n + 1):
                rhs = rhs + c[l] * table[f, l]
            rep.add(f"phi_{f}(w_{k}) phi_{f}(w_{d}) = sum_l c_l({k},{d}) phi_{f}(w_l)",
                    lhs == rhs, f"lhs={lhs}; rhs={rhs}")
    for (k, d), c in coeffs.items():
        for l in range(n + 1):
            a = c[l] * norms[l]
            b = coeffs[(l, d)][k] * norms[k]
            rep.add(f"c_{l}({k},{d}) B(w_{l},w_{l}) = c_{k}({l},{d}) B(w_{k},w_{k})", a == b,
                    f"{a} vs {b}")
    for d in range(n + 1):
        rep.add(f"c_l(0,{d}) = delta", coeffs[(0, d)] == [ONE if l == d else ZERO
                                                           for l in range(n + 1)], "")
    # w_1 is proportional to sum_i u(x^i); the recurrence gives rho(P)(w_1 w_d)
    gs = generator_sum(n)
    kappa = _ratio(gs, w[1])
    rep.add("sum_i u(x^i) = p [n]_q w_1", kappa == P * q_integer(n), f"ratio {kappa}")
    if kappa is not None:
        for d in range(n + 1):
            scale = ((ONE - Q) * kappa).inv()
            exp = [ZERO] * (n + 1)
            if d < n:
                exp[d + 1] = P * q_power(d) * (ONE - q_power(n - d)) * scale
            exp[d] = (ONE - q_power(d)) * (P - ONE) * scale
            if d > 0:
                exp[d - 1] = (ONE - q_power(d)) * scale
            rep.add(f"c_l(1,{d}) from the three-term recurrence", coeffs[(1, d)] == exp,
                    f"got {[str(x) for x in coeffs[(1, d)]]}")
    return rep


def _ratio(a: VElt, b: VElt) -> Optional[Scalar]:
    """c with a = c b, or None."""
    a, b = a.u(), b.u()
    c = None
    for x, y in zip(a.coords, b.coords):
        if y.is_zero():
            if not x.is_zero():
                return None
            continue
        r = x / y
        if c is None:
            c = r
        elif r != c:
            return None
    return c


def laplace_identity_check(n: int) -> Report:
    """(1-q) rho(P)((sum_i u(x^i)) v_d) = p q^d (1-q^(n-d)) w_(d+1) + (1-q^d)(p-1) w_d + (1-q^d) w_(d-1)."""
    rep = Report(f"recurrence identity n={n}")
    w = _invariant_basis(n).w
    gs = generator_sum(n)
    for d in range(n + 1):
        v = VElt.basis_vector(SignVector.trailing(n, d), "v")
        lhs = symmetrize(product(gs, v)).scale(ONE - Q)
        rhs = w[d].scale((ONE - q_power(d)) * (P - ONE))
        if d < n:
            rhs = rhs + w[d + 1].scale(P * q_power(d) * (ONE - q_power(n - d)))
        if d > 0:
            rhs = rhs + w[d - 1].scale(ONE - q_power(d))
        rep.add(f"(1-q) rho(P)(w v_{d}) three-term form", lhs == rhs, "")
    return rep


def lemma_product_check(i: int, z: Union[SignVector, Sequence[int], str], n: int) -> bool:
    """u(z, 1, -1, ..., -1) u(x^i)^2 against its three-part expansion."""
    if not 1 <= i <= n:
        raise DomainError(f"need 1 <= i <= n, got i={i}, n={n}")
    if isinstance(z, str):
        z = SignVector.parse(z) if z else SignVector(0, 0)
    elif not isinstance(z, SignVector):
        z = SignVector.from_signs(list(z))
    if z.n != i - 1:
        raise DomainError(f"z must have length i-1 = {i - 1}, got {z.n}")
    zs = list(z.signs)
    tail = n - i

    def u(signs):
        return VElt.basis_vector(SignVector.from_signs(signs))

    xi = u([1] * (i - 1) + [-1] + [1] * tail)
    lhs = product(product(u(zs + [1] + [-1] * tail), xi), xi)
    rhs = u(zs + [-1] + [-1] * tail).scale(q_power(n - i) * (P - ONE))
    for j in range(i + 1, n + 1):
        signs = zs + [-1] * (n - i + 1)
        signs[j - 1] = 1
        rhs = rhs + u(signs).scale(P * q_power(n - i - 1) * (Q - ONE))
    rhs = rhs + u(zs + [1] + [-1] * tail).scale(P * q_power(n - i))
    return lhs == rhs


def homomorphism_check(n: int, samples: Optional[Sequence[Tuple[int, int]]] = None) -> Report:
    """phi_f(w v) = phi_f(w) phi_f(v) for invariant w = w_d and basis vectors v."""
    rep = Report(f"homomorphism n={n}")
    w = _invariant_basis(n).w
    xs = all_sign_vectors(n)
    samples = samples or [(d, x.bits) for d in range(n + 1) for x in xs[:: max(1, len(xs) // 4)]]
    for f in range(n + 1):
        phi = phi_dual(f, n)
        for d, xb in samples:
            v = VElt.basis_vector(SignVector(n, xb))
            lhs = phi(product(w[d], v))
            rhs = phi(w[d]) * phi(v)
            rep.add(f"phi_{f}(w_{d} u({SignVector(n, xb)})) multiplicative", lhs == rhs, "")
    return rep


def classical_limit_check(n: int, table: Optional[SphericalTable] = None) -> Report:
    rep = Report(f"classical limit n={n}")
    table = table or phi_via_recurrence(n)
    for f in range(n + 1):
        for d in range(n + 1):
            got = table[f, d].specialize(1, 1)
            exp = classical_krawtchouk(f, d, n)
            rep.add(f"phi_{f}(w_{d}) at p=q=1", got == exp, f"got {got}, expected {exp}")
    return rep


class LieType(str, Enum):
    B = "B"
    C = "C"
    D2 = "2D"
    A2_ODD = "2A_odd"
    A2_EVEN = "2A_even"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        key = text.strip().replace("-", "_")
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise DomainError(f"unknown Lie type {text!r}; choose from B, C, 2D, 2A-odd, 2A-even")


_PRESET_EXPONENTS = {
    LieType.B: (1, 1),
    LieType.C: (1, 1),
    LieType.D2: (2, 1),
    LieType.A2_ODD: (1, 2),
    LieType.A2_EVEN: (3, 2),
}


def lie_type_preset(group: Union[LieType, str], q0) -> Tuple[Fraction, Fraction]:
    """(p, q) for the spherical functions of the given family at field size q0."""
    if not isinstance(group, LieType):
        group = LieType.parse(group)
    q0 = Fraction(q0)
    if q0 <= 0:
        raise DomainError(f"q0 must be positive, got {q0}")
    a, b = _PRESET_EXPONENTS[group]
    return q0 ** a, q0 ** b
