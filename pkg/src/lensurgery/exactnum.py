"""Exact rationals and the small amount of elementary number theory the
obstruction pipeline needs.

Every d-invariant is a :class:`Rational`, which is simply
:class:`fractions.Fraction`: it is always reduced, keeps a positive
denominator, and never touches floating point.
"""

from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction


def fmt_rational(x) -> str:
    """Render an exact rational as ``"num/den"`` (integers get ``/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def integral_roots_monic(b: int, c: int, lo: int, hi: int) -> list[int]:
    """Integers j with lo < j < hi and j**2 + b*j + c == 0, increasing.

    The discriminant is tested with an exact integer square root, so the
    answer is exact for integers of any size.
    """
    if not lo < hi:
        raise ValueError(f"empty window ({lo}, {hi})")
    disc = b * b - 4 * c
    if not is_perfect_square(disc):
        return []
    r = isqrt(disc)
    roots = set()
    for num in (-b - r, -b + r):
        # b and r have the same parity when disc is a square, but check anyway
        if num % 2 == 0 and lo < num // 2 < hi:
            roots.add(num // 2)
    return sorted(roots)


def is_square_mod(a: int, m: int) -> bool:
    """True iff a is congruent to some x**2 modulo m (exhaustive scan)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    return any(x * x % m == a for x in range(m))


def square_equivalent(q1: int, q2: int, p: int) -> bool:
    """Whether q1 = q2 * a**2 (mod p) for some unit a.

    This is the equivalence relation on generators of cyclic linking
    forms q/p.  Both residues must be units mod p.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if gcd(q1, p) != 1 or gcd(q2, p) != 1:
        raise ValueError(f"residues {q1}, {q2} are not units mod {p}")
    if p == 1:
        return True
    q1 %= p
    return any(
        (q2 * a * a - q1) % p == 0 for a in range(1, p) if gcd(a, p) == 1
    )
