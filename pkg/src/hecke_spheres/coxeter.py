"""The hyperoctahedral group H_n of signed permutations.

An element ``w`` is stored by its one-line images: ``images[i-1] = w(i)`` is a
signed index, meaning ``w(e_i) = sign * e_|w(i)|`` on the standard basis.
Generators: ``s_i`` (i < n) swaps coordinates i and i+1, ``s_n`` negates
coordinate n.  The length is the number of positive roots

    e_i,  e_i - e_j,  e_i + e_j   (i < j)

sent to negative roots, where a root is positive when its first nonzero
coordinate is positive.

Sign vectors ``x in Z_2^n`` are bitmasks with bit ``i-1`` set iff ``x_i = -1``.
Every ``w`` factors uniquely as ``u_x * sigma`` with ``sigma in S_n`` and
``u_x`` the minimal-length element of the coset ``x S_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError, RankMismatch

__all__ = [
    "SignVector",
    "SignedPerm",
    "CosetDecomposition",
    "GenCosetProduct",
    "coset_rep",
    "decompose",
    "gen_times_coset_rep",
    "all_sign_vectors",
    "all_signed_perms",
    "symmetric_group",
    "word_to_perm",
]


class SignVector:
    """Element of Z_2^n as a bitmask (bit i-1 set iff x_i = -1)."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise DomainError("rank must be nonnegative")
        if not 0 <= bits < (1 << n):
            raise DomainError(f"bitmask {bits} out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, key, value):
        raise AttributeError("SignVector is immutable")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignVector":
        bits = 0
        for i, s in enumerate(signs):
            if s == -1:
                bits |= 1 << i
            elif s != 1:
                raise DomainError(f"sign entries must be +1 or -1, got {s}")
        return cls(len(signs), bits)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        if any(c not in "+-" for c in text):
            raise DomainError(f"sign vector string must use '+' and '-': {text!r}")
        return cls.from_signs([-1 if c == "-" else 1 for c in text])

    @classmethod
    def ones(cls, n: int) -> "SignVector":
        return cls(n, 0)

    @classmethod
    def x_gen(cls, j: int, n: int) -> "SignVector":
        """x^j: the vector with a single -1 at position j."""
        if not 1 <= j <= n:
            raise DomainError(f"need 1 <= j <= n, got j={j}, n={n}")
        return cls(n, 1 << (j - 1))

    @classmethod
    def trailing(cls, n: int, d: int) -> "SignVector":
        """(1, ..., 1, -1, ..., -1) with d trailing minus signs."""
        if not 0 <= d <= n:
            raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
        return cls(n, ((1 << d) - 1) << (n - d))

    def __getitem__(self, i: int) -> int:
        """x_i for 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return -1 if self.bits >> (i - 1) & 1 else 1

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(self[i] for i in range(1, self.n + 1))

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    @property
    def positions(self) -> Tuple[int, ...]:
        """i_1 < ... < i_w, the positions of the -1 entries."""
        return tuple(i for i in range(1, self.n + 1) if self.bits >> (i - 1) & 1)

    def m(self, j: int) -> int:
        """m_j = #{p > j : x_p = 1}."""
        return sum(1 for p in range(j + 1, self.n + 1) if not self.bits >> (p - 1) & 1)

    def swap(self, i: int) -> "SignVector":
        """x^{s_i}: entries i and i+1 interchanged (i < n)."""
        if not 1 <= i < self.n:
            raise DomainError(f"swap needs 1 <= i < n, got i={i}, n={self.n}")
        a = self.bits >> (i - 1) & 1
        b = self.bits >> i & 1
        if a == b:
            return self
        return SignVector(self.n, self.bits ^ (0b11 << (i - 1)))

    def flip(self, j: int) -> "SignVector":
        """x * x^j."""
        return SignVector(self.n, self.bits ^ (1 << (j - 1)))

    def __mul__(self, other: "SignVector") -> "SignVector":
        if other.n != self.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")
        return SignVector(self.n, self.bits ^ other.bits)

    def as_perm(self) -> "SignedPerm":
        return SignedPerm(tuple(self[i] * i for i in range(1, self.n + 1)))

    def __eq__(self, other) -> bool:
        return isinstance(other, SignVector) and self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __lt__(self, other: "SignVector") -> bool:
        return (self.n, self.bits) < (other.n, other.bits)

    def __str__(self) -> str:
        return "".join("-" if s == -1 else "+" for s in self.signs)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"


def all_sign_vectors(n: int) -> List[SignVector]:
    """All of Z_2^n in bitmask order."""
    return [SignVector(n, b) for b in range(1 << n)]


def _root_is_negative(coords: dict) -> bool:
    return coords[min(coords)] < 0


class SignedPerm:
    """Element of the hyperoctahedral group in signed one-line notation."""

    __slots__ = ("images", "_inv", "_len")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(abs(v) for v in images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a signed permutation: {list(images)}")
        self.images = images
        self._inv = None
        self._len = None

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(range(1, n + 1))

    @classmethod
    def generator(cls, i: int, n: int) -> "SignedPerm":
        if not 1 <= i <= n:
            raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
        im = list(range(1, n + 1))
        if i < n:
            im[i - 1], im[i] = im[i], im[i - 1]
        else:
            im[n - 1] = -n
        return cls(im)

    @classmethod
    def parse(cls, text: str) -> "SignedPerm":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise DomainError(f"signed permutation must look like [-2, 1, 3]: {text!r}")
        inner = body[1:-1].strip()
        return cls([int(t) for t in inner.split(",")] if inner else [])

    def __call__(self, i: int) -> int:
        """w(i) for signed i."""
        v = self.images[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if other.n != self.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")
        return SignedPerm(self(v) for v in other.images)

    def inverse(self) -> "SignedPerm":
        if self._inv is None:
            inv = [0] * self.n
            for i, v in enumerate(self.images, start=1):
                inv[abs(v) - 1] = i if v > 0 else -i
            self._inv = SignedPerm(inv)
        return self._inv

    def is_positive(self) -> bool:
        """True for elements of S_n."""
        return all(v > 0 for v in self.images)

    def signs(self) -> SignVector:
        """Sign vector x with w = x * sigma (signs of w(e_i) by target coordinate)."""
        bits = 0
        for v in self.images:
            if v < 0:
                bits |= 1 << (abs(v) - 1)
        return SignVector(self.n, bits)

    def negative_count(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def _apply(self, coords: dict) -> dict:
        out = {}
        for k, c in coords.items():
            v = self.images[k - 1]
            out[abs(v)] = c if v > 0 else -c
        return out

    def length(self) -> int:
        if self._len is None:
            self._len = _length(self.images)
        return self._len

    def root_image_negative(self, i: int) -> bool:
        """Whether w(alpha_i) is a negative root."""
        n = self.n
        if i == n:
            return self.images[n - 1] < 0
        a, b = self.images[i - 1], self.images[i]
        # w(e_i - e_(i+1)) = sign(a) e_|a| - sign(b) e_|b|
        return (a < 0) if abs(a) < abs(b) else (b > 0)

    def has_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w)."""
        return self.inverse().root_image_negative(i)

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w)."""
        return self.root_image_negative(i)

    def left_mul_gen(self, i: int) -> "SignedPerm":
        """s_i * w."""
        n = self.n
        if i == n:
            return SignedPerm(-v if abs(v) == n else v for v in self.images)
        def f(v):
            a = abs(v)
            if a == i:
                return i + 1 if v > 0 else -(i + 1)
            if a == i + 1:
                return i if v > 0 else -i
            return v
        return SignedPerm(f(v) for v in self.images)

    def right_mul_gen(self, i: int) -> "SignedPerm":
        """w * s_i."""
        im = list(self.images)
        if i == self.n:
            im[-1] = -im[-1]
        else:
            im[i - 1], im[i] = im[i], im[i - 1]
        return SignedPerm(im)

    def reduced_word(self) -> Tuple[int, ...]:
        """Reduced word (i_1, ..., i_l) with w = s_(i_1) ... s_(i_l).

        Always strips the smallest left descent first.
        """
        return _reduced_word(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPerm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def sort_key(self):
        return (self.length(), self.reduced_word())

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.images) + "]"

    def __repr__(self) -> str:
        return f"SignedPerm({list(self.images)})"


@lru_cache(maxsize=None)
def _length(images: Tuple[int, ...]) -> int:
    n = len(images)
    count = 0
    for i in range(n):
        if images[i] < 0:
            count += 1  # e_i
        for j in range(i + 1, n):
            a, b = images[i], images[j]
            # w(e_i - e_j) and w(e_i + e_j)
            if abs(a) < abs(b):
                count += (a < 0) + (a < 0)
            else:
                count += (b > 0) + (b < 0)
    return count


@lru_cache(maxsize=None)
def _reduced_word(images: Tuple[int, ...]) -> Tuple[int, ...]:
    w = SignedPerm(images)
    word: List[int] = []
    while True:
        for i in range(1, w.n + 1):
            if w.has_left_descent(i):
                word.append(i)
                w = w.left_mul_gen(i)
                break
        else:
            return tuple(word)


def word_to_perm(word: Sequence[int], n: int) -> SignedPerm:
    """s_(i_1) ... s_(i_k) as a signed permutation."""
    w = SignedPerm.identity(n)
    for i in reversed(word):
        w = w.left_mul_gen(i)
    return w


def all_signed_perms(n: int) -> Iterator[SignedPerm]:
    for perm in permutations(range(1, n + 1)):
        for bits in range(1 << n):
            yield SignedPerm(-v if bits >> k & 1 else v for k, v in enumerate(perm))


def symmetric_group(n: int) -> Iterator[SignedPerm]:
    for perm in permutations(range(1, n + 1)):
        yield SignedPerm(perm)


@dataclass(frozen=True)
class CosetDecomposition:
    x: SignVector
    u_x: SignedPerm
    sigma_x: SignedPerm
    length_x: int
    length_u: int
    length_sigma: int
    sigma: SignedPerm  # the greedy permutation, equal to sigma_x^-1

    def closed_form_lengths(self) -> Tuple[int, int, int]:
        """(l(x), l(u_x), l(sigma_x)) from the weight and positions of x."""
        w = self.x.weight
        s = sum(self.x.positions)
        n = self.x.n
        return (1 + 2 * n) * w - 2 * s, (1 + n) * w - s, n * w - s


@lru_cache(maxsize=None)
def _coset_rep(n: int, bits: int) -> CosetDecomposition:
    x = SignVector(n, bits)
    unused = list(range(1, n + 1))
    sigma = []
    for i in range(1, n + 1):
        sigma.append(unused.pop() if x[i] == -1 else unused.pop(0))
    sigma = SignedPerm(sigma)
    sigma_x = sigma.inverse()
    xp = x.as_perm()
    u = xp * sigma_x
    return CosetDecomposition(x, u, sigma_x, xp.length(), u.length(), sigma_x.length(), sigma)


def coset_rep(x: SignVector) -> CosetDecomposition:
    """Minimal-length representative u_x = x * sigma_x of the coset x S_n."""
    return _coset_rep(x.n, x.bits)


def decompose(w: SignedPerm) -> Tuple[CosetDecomposition, SignedPerm]:
    """(coset data of x, sigma) with w = u_x * sigma."""
    x = w.signs()
    cd = coset_rep(x)
    return cd, cd.u_x.inverse() * w


@dataclass(frozen=True)
class GenCosetProduct:
    """How s_i * u_x sits in the coset decomposition.

    ``kind`` is ``"move"`` (s_i u_x = u_y with y = target) or ``"stay"``
    (s_i u_x = u_x s_j).  ``ascent`` tells whether the length goes up.
    """

    kind: str
    ascent: bool
    target: SignVector
    j: Optional[int] = None


def gen_times_coset_rep(i: int, x: SignVector) -> GenCosetProduct:
    n = x.n
    if not 1 <= i <= n:
        raise DomainError(f"generator index must satisfy 1 <= i <= n, got i={i}, n={n}")
    if i == n:
        return GenCosetProduct("move", x[n] == 1, x.flip(n))
    a, b = x[i], x[i + 1]
    if a != b:
        return GenCosetProduct("move", a > b, x.swap(i))
    sigma = coset_rep(x).sigma
    j = min(sigma(i), sigma(i + 1))
    return GenCosetProduct("stay", True, x, j)
