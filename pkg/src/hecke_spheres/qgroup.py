"""U_(q^(1/2))(sl2) acting on V_n = W^(tensor n) and Jimbo duality.

Generators K, K^-1, E, F with KE = qEK, KF = q^-1 FK and
EF - FE = (K - K^-1)/(q^(1/2) - q^(-1/2)).  On the fundamental module, in the
ordered basis (e_-1, e_1):

    K = diag(q^(1/2), q^(-1/2)),   E e_1 = e_-1,   F e_-1 = e_1.

The n-fold coproduct gives t(K) = K^(tensor n),
t(E) = sum_i K^(i-1) (x) E (x) 1^(n-i) and t(F) = sum_i 1^(i-1) (x) F (x) K^-(n-i).
The tensor e_(i_1) (x) ... (x) e_(i_n) is identified with uhat(i_1, ..., i_n),
so every matrix here is written in the uhat basis (bitmask order).
"""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .characters import DualElt, functional_to_dual
from .coxeter import SignVector, all_sign_vectors
from .errors import DomainError, RankMismatch
from .hecke import check_cap, symmetrizer_leaves
from .linalg import nullspace, rank
from .report import Report
from .scalars import ONE, P_HALF, Q, Q_HALF, ZERO, Scalar, ScalarLike, as_scalar, q_power
from .vmodule import VElt, act_gen, iota_u_half

__all__ = [
    "UqGen",
    "UqElt",
    "SparseMatrix",
    "fundamental_rep",
    "t_action",
    "t_matrix",
    "rho_matrix",
    "star_gen",
    "apply_t",
    "t_star",
    "eigen_operator",
    "check_commutant",
    "commutant_dimension_uq",
    "commutant_dimension_hecke",
    "hecke_span_dimension",
    "clebsch_gordan_multiplicities",
    "invariant_subspace",
]


class UqGen(str, Enum):
    K = "K"
    KINV = "Kinv"
    E = "E"
    F = "F"


class SparseMatrix:
    """Square matrix over Scalars stored as a list of ``{col: value}`` rows."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: Optional[List[Dict[int, Scalar]]] = None):
        self.dim = dim
        self.rows = rows if rows is not None else [dict() for _ in range(dim)]

    @classmethod
    def identity(cls, dim: int) -> "SparseMatrix":
        return cls(dim, [{i: ONE} for i in range(dim)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalar]]) -> "SparseMatrix":
        dim = len(cols)
        rows = [dict() for _ in range(dim)]
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if not v.is_zero():
                    rows[i][j] = v
        return cls(dim, rows)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, ZERO)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = []
        for row in self.rows:
            acc: Dict[int, Scalar] = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            out.append({j: v for j, v in acc.items() if not v.is_zero()})
        return SparseMatrix(self.dim, out)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = []
        for r1, r2 in zip(self.rows, other.rows):
            acc = dict(r1)
            for j, v in r2.items():
                acc[j] = acc.get(j, ZERO) + v
            out.append({j: v for j, v in acc.items() if not v.is_zero()})
        return SparseMatrix(self.dim, out)

    def scale(self, c: ScalarLike) -> "SparseMatrix":
        c = as_scalar(c)
        if c.is_zero():
            return SparseMatrix(self.dim)
        return SparseMatrix(self.dim, [{j: c * v for j, v in r.items()} for r in self.rows])

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(-1)

    def transpose(self) -> "SparseMatrix":
        out = [dict() for _ in range(self.dim)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[j][i] = v
        return SparseMatrix(self.dim, out)

    def apply(self, coords: Sequence[Scalar]) -> List[Scalar]:
        out = []
        for r in self.rows:
            acc = ZERO
            for j, v in r.items():
                c = coords[j]
                if not c.is_zero():
                    acc = acc + v * c
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def first_nonzero(self) -> Optional[Tuple[int, int, Scalar]]:
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                return i, j, r[j]
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseMatrix) and self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, tuple(frozenset(r.items()) for r in self.rows)))

    def specialize(self, q_half: Fraction) -> List[Dict[int, Fraction]]:
        return [{j: v.specialize(q_half=q_half) for j, v in r.items()} for r in self.rows]


def fundamental_rep(g: UqGen) -> List[List[Scalar]]:
    """2x2 matrix of g in the ordered basis (e_-1, e_1)."""
    g = UqGen(g)
    qi = Q_HALF.inv()
    if g is UqGen.K:
        return [[Q_HALF, ZERO], [ZERO, qi]]
    if g is UqGen.KINV:
        return [[qi, ZERO], [ZERO, Q_HALF]]
    if g is UqGen.E:
        return [[ZERO, ONE], [ZERO, ZERO]]
    return [[ZERO, ZERO], [ONE, ZERO]]


def _k_exp(bits: int, positions: Iterable[int]) -> int:
    # exponent of q^(1/2) in the K eigenvalue over the given tensor slots
    return sum(1 if bits >> k & 1 else -1 for k in positions)


@lru_cache(maxsize=None)
def t_action(g: UqGen, n: int) -> SparseMatrix:
    """t(g) on V_n in the uhat basis."""
    g = UqGen(g)
    if n < 1:
        raise DomainError("rank must be positive")
    dim = 1 << n
    rows: List[Dict[int, Scalar]] = [dict() for _ in range(dim)]
    if g in (UqGen.K, UqGen.KINV):
        sign = 1 if g is UqGen.K else -1
        for b in range(dim):
            rows[b][b] = Scalar.monomial(0, sign * _k_exp(b, range(n)))
        return SparseMatrix(dim, rows)
    for b in range(dim):
        for i in range(n):
            bit = 1 << i
            if g is UqGen.E and not b & bit:
                # e_1 -> e_-1 in slot i, K on slots before i
                rows[b | bit][b] = Scalar.monomial(0, _k_exp(b, range(i)))
            elif g is UqGen.F and b & bit:
                # e_-1 -> e_1 in slot i, K^-1 on slots after i
                rows[b ^ bit][b] = Scalar.monomial(0, -_k_exp(b, range(i + 1, n)))
    return SparseMatrix(dim, rows)


@lru_cache(maxsize=None)
def rho_matrix(i: int, n: int) -> SparseMatrix:
    """rho(T_i) in the uhat basis."""
    cols = []
    for x in all_sign_vectors(n):
        cols.append(act_gen(i, VElt.basis_vector(x, "uhat")).coords)
    return SparseMatrix.from_columns(cols)


Word = Tuple[UqGen, ...]


class UqElt:
    """Linear combination of words in the generators (no normal form)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Word, ScalarLike]] = None):
        clean: Dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                clean[tuple(UqGen(g) for g in w)] = c
        self.terms = clean

    @classmethod
    def gen(cls, g: UqGen) -> "UqElt":
        return cls({(UqGen(g),): ONE})

    @classmethod
    def one(cls) -> "UqElt":
        return cls({(): ONE})

    def __add__(self, other: "UqElt") -> "UqElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return UqElt(out)

    def __sub__(self, other: "UqElt") -> "UqElt":
        return self + other.scale(-1)

    def scale(self, c: ScalarLike) -> "UqElt":
        c = as_scalar(c)
        return UqElt({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UqElt):
            out: Dict[Word, Scalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    out[w1 + w2] = out.get(w1 + w2, ZERO) + c1 * c2
            return UqElt(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "UqElt":
        """Antimultiplicative involution; real coefficients are fixed."""
        out = UqElt()
        for w, c in self.terms.items():
            term = UqElt.one().scale(c)
            for g in reversed(w):
                term = term * star_gen(g)
            out = out + term
        return out

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{'.'.join(g.value for g in w) or '1'}"
                          for w, c in self.terms.items())
        return f"UqElt({body or '0'})"


def star_gen(g: UqGen) -> UqElt:
    """K* = K, (K^-1)* = K^-1, E* = q^(-1/2) F K, F* = q^(1/2) K^-1 E."""
    g = UqGen(g)
    if g in (UqGen.K, UqGen.KINV):
        return UqElt.gen(g)
    if g is UqGen.E:
        return UqElt({(UqGen.F, UqGen.K): Q_HALF.inv()})
    return UqElt({(UqGen.KINV, UqGen.E): Q_HALF})


def t_matrix(X: UqElt, n: int) -> SparseMatrix:
    out = SparseMatrix(1 << n)
    for w, c in X.terms.items():
        m = SparseMatrix.identity(1 << n)
        for g in w:
            m = m @ t_action(g, n)
        out = out + m.scale(c)
    return out


def apply_t(X: UqElt, v: VElt) -> VElt:
    """t(X) v, returned in the basis of v."""
    coords = t_matrix(X, v.n).apply(v.to_basis("uhat").coords)
    return VElt(v.n, coords, "uhat").to_basis(v.basis)


def t_star(X: UqElt, d: DualElt) -> DualElt:
    """(t*(X) chi)(v) = chi(t(X*) v)."""
    n = d.n
    m = t_matrix(X.star(), n)
    values = []
    for x in all_sign_vectors(n):
        values.append(d(apply_t_matrix(m, VElt.basis_vector(x))))
    return functional_to_dual(n, values)


def apply_t_matrix(m: SparseMatrix, v: VElt) -> VElt:
    return VElt(v.n, m.apply(v.to_basis("uhat").coords), "uhat")


def eigen_operator() -> UqElt:
    """E + E* + (p^(1/2) - p^(-1/2)) / (q^(1/2) - q^(-1/2)) (K - 1)."""
    E = UqElt.gen(UqGen.E)
    c = (P_HALF - P_HALF.inv()) / (Q_HALF - Q_HALF.inv())
    return E + E.star() + (UqElt.gen(UqGen.K) - UqElt.one()).scale(c)


# --------------------------------------------------------------------------
# commutant computations

def clebsch_gordan_multiplicities(n: int) -> Dict[int, int]:
    """Multiplicity of W_N in W_1^(tensor n), by iterating W_N (x) W_1 = W_(N+1) + W_(N-1)."""
    mult = {1: 1}
    for _ in range(n - 1):
        nxt: Dict[int, int] = {}
        for N, m in mult.items():
            nxt[N + 1] = nxt.get(N + 1, 0) + m
            if N >= 1:
                nxt[N - 1] = nxt.get(N - 1, 0) + m
        mult = nxt
    return dict(sorted(mult.items(), reverse=True))


def _weight_classes(n: int) -> Dict[int, List[int]]:
    classes: Dict[int, List[int]] = {}
    for b in range(1 << n):
        classes.setdefault(bin(b).count("1"), []).append(b)
    return classes


def _commutant_rows(mats, unknowns: Dict[Tuple[int, int], int]):
    """Rows of the linear system M A = A M for each A, in unknown entries of M."""
    rows = []
    for A in mats:
        cols_of = [dict() for _ in range(A.dim)]
        for k, r in enumerate(A.rows):
            for j, v in r.items():
                cols_of[j][k] = v
        rowset = {i for (i, _) in unknowns}
        colset = {j for (_, j) in unknowns}
        targets = set()
        for (i, k) in unknowns:
            for j in A.rows[k]:
                targets.add((i, j))
            for a in cols_of[i]:
                targets.add((a, k))
        for (i, j) in sorted(targets):
            eq: Dict[int, Scalar] = {}
            # (M A)_ij = sum_k M_ik A_kj ; (A M)_ij = sum_k A_ik M_kj
            for k, v in cols_of[j].items():
                u = unknowns.get((i, k))
                if u is not None:
                    eq[u] = eq.get(u, ZERO) + v
            for k, v in A.rows[i].items():
                u = unknowns.get((k, j))
                if u is not None:
                    eq[u] = eq.get(u, ZERO) - v
            eq = {u: v for u, v in eq.items() if not v.is_zero()}
            if eq:
                rows.append(eq)
    return rows


def _specialize_rows(rows, q_half: Fraction):
    return [{u: v.specialize(q_half=q_half) for u, v in r.items()} for r in rows]


def _kernel_dim(rows, nunk: int, *, exact: bool, seed: int = 0) -> int:
    if exact:
        return nunk - rank(rows, nunk)
    rng = random.Random(seed)
    while True:
        qh = Fraction(rng.randint(2, 97), rng.randint(1, 97))
        try:
            spec = _specialize_rows(rows, qh)
        except ZeroDivisionError:
            continue
        return nunk - rank(spec, nunk)


def commutant_dimension_uq(n: int, *, exact: bool = True) -> int:
    """dim {M : M t(g) = t(g) M for g = K, E, F}.

    Commuting with t(K) forces M to preserve the weight grading, so only the
    diagonal weight blocks carry unknowns.
    """
    classes = _weight_classes(n)
    unknowns: Dict[Tuple[int, int], int] = {}
    for cls in classes.values():
        for i in cls:
            for j in cls:
                unknowns[(i, j)] = len(unknowns)
    rows = _commutant_rows([t_action(UqGen.E, n), t_action(UqGen.F, n)], unknowns)
    return _kernel_dim(rows, len(unknowns), exact=exact)


def commutant_dimension_hecke(n: int, *, exact: bool = True) -> int:
    """dim {M : M rho(T_i) = rho(T_i) M for all i < n}.

    rho(T_i) preserves the weight grading, so the system splits into one
    independent block per pair of weights.
    """
    classes = _weight_classes(n)
    mats = [rho_matrix(i, n) for i in range(1, n)]
    total = 0
    for wr, rcls in classes.items():
        for wc, ccls in classes.items():
            unknowns = {}
            for i in rcls:
                for j in ccls:
                    unknowns[(i, j)] = len(unknowns)
            if not mats:
                total += len(unknowns)
                continue
            rows = _commutant_rows(mats, unknowns)
            total += _kernel_dim(rows, len(unknowns), exact=exact)
    return total


def hecke_span_dimension(n: int, *, exact: bool = True) -> int:
    """dim span {rho(T_sigma) : sigma in S_n}, the image of the type-A Hecke algebra."""
    check_cap(n, "hecke span")
    dim = 1 << n
    mats = list(symmetrizer_leaves(n, SparseMatrix.identity(dim),
                                   lambda i, m: rho_matrix(i, n) @ m))
    return _span_rank(mats, dim, exact)


def _span_rank(mats: List[SparseMatrix], dim: int, exact: bool) -> int:
    rows = []
    for m in mats:
        rows.append({i * dim + j: v for i, r in enumerate(m.rows) for j, v in r.items()})
    if exact:
        return rank(rows, dim * dim)
    rng = random.Random(1)
    qh = Fraction(rng.randint(2, 97), rng.randint(1, 97))
    return rank(_specialize_rows(rows, qh), dim * dim)


def check_commutant(n: int, *, dimensions: bool = True, exact: bool = True) -> Report:
    """Commutation of t(U) with rho(T_i) and the commutant dimensions.

    If V_n = sum_N W_N (x) M_N with W_N the (N+1)-dimensional U-module and
    M_N its multiplicity space, then the commutant of t(U) has dimension
    sum_N (dim M_N)^2 and the commutant of the rho(T_i) has dimension
    sum_N (N+1)^2, both read off from the Clebsch-Gordan multiplicities.
    """
    if n < 2:
        raise DomainError("check_commutant needs n >= 2")
    rep = Report(f"jimbo n={n}")
    for g in UqGen:
        tg = t_action(g, n)
        for i in range(1, n):
            R = rho_matrix(i, n)
            comm = tg @ R - R @ tg
            wit = "" if comm.is_zero() else f"entry {comm.first_nonzero()}"
            rep.add(f"[t({g.value}), rho(T_{i})] = 0", comm.is_zero(), wit)
    if dimensions:
        mult = clebsch_gordan_multiplicities(n)
        expect_uq = sum(m * m for m in mult.values())
        expect_hecke = sum((N + 1) ** 2 for N in mult)
        # randomized pre-check first, then the exact run
        pre = commutant_dimension_uq(n, exact=False)
        rep.add("commutant of t(U) (specialized pre-check)", pre == expect_uq,
                           f"got {pre}, expected {expect_uq}")
        d_uq = commutant_dimension_uq(n, exact=exact)
        d_hecke = commutant_dimension_hecke(n, exact=exact)
        rep.data = {"commutant_uq": d_uq, "commutant_hecke": d_hecke,
                          "multiplicity_square_sum": expect_uq,
                          "irrep_dimension_square_sum": expect_hecke}
        rep.add("dim commutant of t(U) = sum of squared multiplicities",
                           d_uq == expect_uq, f"got {d_uq}, expected {expect_uq}")
        rep.add("dim commutant of rho(T_i) = sum of squared irrep dimensions",
                           d_hecke == expect_hecke, f"got {d_hecke}, expected {expect_hecke}")
    return rep


def invariant_subspace(n: int) -> List[VElt]:
    """Basis (u coordinates) of {v : rho(T_i) v = q v for all i < n}.

    Computed as an exact kernel in the u basis.  The caller can check that it
    is stable under t(K), t(E), t(F).
    """
    check_cap(n, "invariant subspace")
    dim = 1 << n
    if n == 1:
        return [VElt.basis_vector(x) for x in all_sign_vectors(1)]
    rows = []
    for i in range(1, n):
        cols = [act_gen(i, VElt.basis_vector(x)).coords for x in all_sign_vectors(n)]
        for r in range(dim):
            eq = {c: cols[c][r] for c in range(dim) if not cols[c][r].is_zero()}
            eq[r] = eq.get(r, ZERO) - Q
            eq = {c: v for c, v in eq.items() if not v.is_zero()}
            if eq:
                rows.append(eq)
    basis = nullspace(rows, dim, one=ONE)
    out = []
    for vec in basis:
        coords = [vec.get(c, ZERO) for c in range(dim)]
        out.append(VElt(n, coords, "u"))
    return out
