"""Generic Hecke algebra of type B_n with parameters p, q.

Basis ``T_w`` (w in H_n), relations ``T_i^2 = (q-1) T_i + q`` for i < n and
``T_n^2 = (p-1) T_n + p``.  Products are computed by pushing generators one at
a time along reduced words; no multiplication table is stored.

The type-A subalgebra F_n is spanned by ``T_sigma`` with sigma in S_n.  Its
symmetrizer ``sum_sigma T_sigma`` is enumerated depth-first along
S_1 < S_2 < ... < S_n so that partial products are shared between terms.
"""

from __future__ import annotations

import os
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, TypeVar

from .coxeter import SignedPerm, word_to_perm
from .errors import CapExceeded, DomainError, RankMismatch
from .scalars import ONE, P, Q, ZERO, Scalar, ScalarLike, as_scalar, p_power, q_power

__all__ = [
    "HeckeElt",
    "DEFAULT_MAX_N",
    "HARD_MAX_N",
    "max_n",
    "check_cap",
    "gen_mul_left",
    "gen_mul_right",
    "multiply",
    "index_rep",
    "index_rep_prime",
    "sign_rep",
    "star1",
    "star2",
    "symmetrizer_terms",
    "symmetrizer_apply",
    "symmetrizer_leaves",
    "symmetrizer",
]

DEFAULT_MAX_N = 8
HARD_MAX_N = 10
CAP_ENV = "HECKE_SPHERES_MAX_N"


def max_n() -> int:
    """Rank cap for n!-cost routines; the env var may raise it up to 10."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{CAP_ENV} must be positive, got {value}")
    return min(value, HARD_MAX_N)


def check_cap(n: int, what: str = "symmetrizer") -> None:
    cap = max_n()
    if n > cap:
        raise CapExceeded(
            f"{what} at n={n} needs about n!*n = {_fact(n) * n} generator applications; "
            f"cap is n <= {cap} (set {CAP_ENV}, hard limit {HARD_MAX_N})"
        )


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _param(i: int, n: int) -> Scalar:
    return P if i == n else Q


class HeckeElt:
    """Finite linear combination of T_w with Scalar coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[SignedPerm, ScalarLike]] = None):
        self.n = n
        clean: Dict[SignedPerm, Scalar] = {}
        for w, c in (terms or {}).items():
            if w.n != n:
                raise RankMismatch(f"basis element {w} does not have rank {n}")
            c = as_scalar(c)
            if not c.is_zero():
                clean[w] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: Dict[SignedPerm, Scalar]) -> "HeckeElt":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def basis(cls, w: SignedPerm, coeff: ScalarLike = 1) -> "HeckeElt":
        return cls(w.n, {w: coeff})

    @classmethod
    def one(cls, n: int) -> "HeckeElt":
        return cls.basis(SignedPerm.identity(n))

    @classmethod
    def zero(cls, n: int) -> "HeckeElt":
        return cls(n)

    @classmethod
    def gen(cls, i: int, n: int) -> "HeckeElt":
        return cls.basis(SignedPerm.generator(i, n))

    def _check(self, other: "HeckeElt") -> None:
        if other.n != self.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return HeckeElt._raw(self.n, out)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt._raw(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "HeckeElt":
        c = as_scalar(c)
        if c.is_zero():
            return HeckeElt(self.n)
        return HeckeElt._raw(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElt) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: SignedPerm) -> Scalar:
        return self.terms.get(w, ZERO)

    def to_pairs(self) -> List[Tuple[str, str]]:
        """(signed permutation, coefficient) strings sorted by length, then word."""
        return [(str(w), str(self.terms[w])) for w in sorted(self.terms, key=SignedPerm.sort_key)]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[str, str]]) -> "HeckeElt":
        return cls(n, {SignedPerm.parse(w): Scalar.parse(c) for w, c in pairs})

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*T{w}" for w, c in self.to_pairs()) or "0"
        return f"HeckeElt(n={self.n}: {body})"


def _accumulate(out: Dict, key, c: Scalar) -> None:
    s = out.get(key)
    s = c if s is None else s + c
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def gen_mul_left(i: int, a: HeckeElt) -> HeckeElt:
    """T_i * a."""
    n = a.n
    if not 1 <= i <= n:
        raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
    c = _param(i, n)
    out: Dict[SignedPerm, Scalar] = {}
    for w, coef in a.terms.items():
        sw = w.left_mul_gen(i)
        if w.has_left_descent(i):
            _accumulate(out, w, (c - ONE) * coef)
            _accumulate(out, sw, c * coef)
        else:
            _accumulate(out, sw, coef)
    return HeckeElt._raw(n, out)


def gen_mul_right(a: HeckeElt, i: int) -> HeckeElt:
    """a * T_i."""
    n = a.n
    if not 1 <= i <= n:
        raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
    c = _param(i, n)
    out: Dict[SignedPerm, Scalar] = {}
    for w, coef in a.terms.items():
        ws = w.right_mul_gen(i)
        if w.has_right_descent(i):
            _accumulate(out, w, (c - ONE) * coef)
            _accumulate(out, ws, c * coef)
        else:
            _accumulate(out, ws, coef)
    return HeckeElt._raw(n, out)


def multiply(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._check(b)
    out: Dict[SignedPerm, Scalar] = {}
    for w, coef in a.terms.items():
        r = b
        for i in reversed(w.reduced_word()):
            r = gen_mul_left(i, r)
        for v, c in r.terms.items():
            _accumulate(out, v, coef * c)
    return HeckeElt._raw(a.n, out)


def index_rep(a: HeckeElt) -> Scalar:
    """iota: T_i -> q (i < n), T_n -> p."""
    total = ZERO
    for w, c in a.terms.items():
        k = w.negative_count()
        total = total + c * p_power(k) * q_power(w.length() - k)
    return total


def index_rep_prime(a: HeckeElt) -> Scalar:
    """iota': T_i -> q (i < n), T_n -> -1."""
    total = ZERO
    for w, c in a.terms.items():
        k = w.negative_count()
        term = c * q_power(w.length() - k)
        total = total + (-term if k % 2 else term)
    return total


def sign_rep(a: HeckeElt) -> Scalar:
    """T_w -> (-1)^l(w)."""
    total = ZERO
    for w, c in a.terms.items():
        total = total + (-c if w.length() % 2 else c)
    return total


def star1(a: HeckeElt) -> HeckeElt:
    """T_w -> T_(w^-1); coefficients are real, so they are left alone."""
    return HeckeElt._raw(a.n, {w.inverse(): c for w, c in a.terms.items()})


def _basis_inverse(w: SignedPerm) -> HeckeElt:
    n = w.n
    out = HeckeElt.one(n)
    for i in w.reduced_word():
        ci = _param(i, n).inv()
        # T_i^-1 * out = c^-1 T_i out + (c^-1 - 1) out
        out = gen_mul_left(i, out).scale(ci) + out.scale(ci - ONE)
    return out


def star2(a: HeckeElt) -> HeckeElt:
    """T_w -> T_w^-1, with p^(1/2), q^(1/2) inverted in the coefficients."""
    out = HeckeElt(a.n)
    for w, c in a.terms.items():
        out = out + _basis_inverse(w).scale(c.bar())
    return out


V = TypeVar("V")


def symmetrizer_leaves(n: int, v: V, act: Callable[[int, V], V], *, cap: bool = True) -> Iterator[V]:
    """Yield T_sigma v for every sigma in S_n.

    ``act(i, v)`` must return ``T_i v``.  Each sigma is written as
    c_n ... c_2 with c_k = s_j s_(j+1) ... s_(k-1) the minimal representative of
    a coset in S_k / S_(k-1); the tree of partial products is walked depth
    first, so about e * n! generator applications are made.
    """
    if cap:
        check_cap(n)

    def level(k: int, vec: V):
        if k > n:
            yield vec
            return
        yield from level(k + 1, vec)
        cur = vec
        for j in range(k - 1, 0, -1):
            cur = act(j, cur)
            yield from level(k + 1, cur)

    yield from level(2, v)


def symmetrizer_apply(n: int, v: V, act: Callable[[int, V], V],
                      add: Callable[[V, V], V], *, cap: bool = True) -> V:
    """sum over sigma in S_n of T_sigma v (see :func:`symmetrizer_leaves`)."""
    total = None
    for leaf in symmetrizer_leaves(n, v, act, cap=cap):
        total = leaf if total is None else add(total, leaf)
    return total


def symmetrizer_terms(n: int) -> Iterator[Tuple[SignedPerm, Tuple[int, ...]]]:
    """Yield (sigma, word) for every sigma in S_n, in depth-first order.

    ``word`` lists generator indices in the order they are applied to a
    vector, so ``sigma = s_(word[-1]) ... s_(word[0])``.  Consecutive words
    share prefixes, which is what :func:`symmetrizer_apply` exploits.
    """
    check_cap(n)

    def level(k: int, word: Tuple[int, ...]):
        if k > n:
            yield word_to_perm(tuple(reversed(word)), n), word
            return
        yield from level(k + 1, word)
        cur = word
        for j in range(k - 1, 0, -1):
            cur = cur + (j,)
            yield from level(k + 1, cur)

    yield from level(2, ())


def symmetrizer(n: int) -> HeckeElt:
    """The unnormalized symmetrizer sum_(sigma in S_n) T_sigma."""
    return symmetrizer_apply(n, HeckeElt.one(n), gen_mul_left, lambda a, b: a + b)
