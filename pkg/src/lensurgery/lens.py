"""Oriented lens spaces and their Heegaard Floer correction terms.

Spin^c structures on L(p, q) are labelled by 0 <= i < p using the
Ozsvath-Szabo identification, under which

    d(L(p,q), i) = -1/4 + (2i + 1 - p - q)**2 / (4pq) - d(L(q, r), j)

with r = p mod q and j = i mod q, valid for 0 <= i < p + q.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with positive orientation, 0 <= q < p (q = 0 only for S^3).

    ``flipped`` records that :func:`normalize` absorbed an orientation
    reversal; it is ignored by equality and hashing.
    """

    p: int
    q: int
    flipped: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be positive, got {self.p}")
        if not 0 <= self.q < self.p:
            raise ValueError(f"q must satisfy 0 <= q < p, got L({self.p},{self.q})")
        if self.p > 1 and gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd(p, q) must be 1, got L({self.p},{self.q})")

    def __str__(self):
        return f"L({self.p},{self.q})"

    def spins(self) -> range:
        return range(self.p)


def normalize(p_raw: int, q_raw: int) -> LensSpace:
    """Canonical representative of L(p_raw, q_raw).

    A negative p_raw stands for -L(|p_raw|, q_raw), which is rewritten
    as L(|p|, |p| - q) using -L(p, q) = L(p, p - q).
    """
    if p_raw == 0:
        raise ValueError("p must be nonzero")
    p = abs(p_raw)
    q = q_raw % p
    if p > 1 and gcd(p, q) != 1:
        raise ValueError(f"gcd({p_raw}, {q_raw}) != 1")
    if p_raw < 0:
        return LensSpace(p, (p - q) % p, flipped=True)
    return LensSpace(p, q)


@lru_cache(maxsize=None)
def _d(p: int, q: int, i: int) -> Fraction:
    # lru_cache serialises its own bookkeeping, so concurrent callers are safe;
    # the worst case is a subproblem computed twice.
    if p == 1:
        return Fraction(0)
    r = p % q
    return -QUARTER + Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q) - _d(q, r, i % q)


def d_invariant(L: LensSpace, i: int) -> Fraction:
    """d(L(p, q), i) for 0 <= i < p, by the lens space recursion."""
    if not 0 <= i < L.p:
        raise IndexError(f"spin^c index {i} out of range for {L}")
    return _d(L.p, L.q, i)


def d_L_n1(n: int, i: int) -> Fraction:
    """Closed form for d(L(n, 1), i); negative n means -L(|n|, 1)."""
    if n == 0:
        raise ValueError("n must be nonzero")
    m = abs(n)
    if not 0 <= i < m:
        raise IndexError(f"spin^c index {i} out of range for L({n},1)")
    value = -QUARTER + Fraction((2 * i - m) ** 2, 4 * m)
    return value if n > 0 else -value


def self_conjugate_spins(L: LensSpace) -> set[int]:
    """Indices fixed by conjugation: the integers among (p+q-1)/2 and (q-1)/2."""
    return {(t // 2) % L.p for t in (L.p + L.q - 1, L.q - 1) if t % 2 == 0}


def conjugate_spin(L: LensSpace, i: int) -> int:
    # Unique affine involution of Z/p whose fixed points are the
    # self-conjugate indices above; checked against d-symmetry in the tests.
    return (L.q - 1 - i) % L.p
