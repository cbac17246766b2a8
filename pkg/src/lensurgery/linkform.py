"""Linking forms q/p on cyclic H_1 and the homological filling obstruction.

Convention: L(p, q) is p/q surgery on the unknot and has linking form
q/p (not -q/p).  Flipping the sign everywhere does not change which
forms are equivalent, so only consistency matters.
"""

from dataclasses import dataclass
from math import gcd

from .exactnum import square_equivalent


@dataclass(frozen=True)
class LinkingForm:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"order must be positive, got {self.p}")
        object.__setattr__(self, "q", self.q % self.p)
        if gcd(self.q, self.p) != 1:
            raise ValueError(f"{self.q}/{self.p} is not a unit")

    def __str__(self):
        return f"{self.q}/{self.p}"


def essential_k(n: int) -> int:
    """k with |n| = 3k + 1 or 3k - 1."""
    m = abs(n)
    if m % 3 == 0:
        raise ValueError(f"|n| = {m} is divisible by 3")
    return (m - 1) // 3 if m % 3 == 1 else (m + 1) // 3


def filling_linking_form(n: int) -> LinkingForm:
    """Linking form of the filling (3k +- 1)m + k*l of a homologically
    essential knot exterior in L(3,1), with meridian 3m + l."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return LinkingForm(abs(n), essential_k(n))


def target_linking_form(n: int) -> LinkingForm:
    """Linking form sign(n)/|n| of L(n, 1); -1 is stored as its residue."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return LinkingForm(abs(n), 1 if n > 0 else -1)


def linking_forms_equivalent(f: LinkingForm, g: LinkingForm) -> bool:
    if f.p != g.p:
        return False
    return square_equivalent(f.q, g.q, f.p)
