"""d-invariant surgery constraints for distance-one surgery on L(3,1).

Four ingredients feed the classifier:

* the Ni-Wu formula for surgery on a null-homologous knot in an L-space,
  with Rasmussen's local h-invariants V_i;
* the spin cobordism analysis for even targets, which pins down which
  (spin^c index, definiteness) pairs can occur;
* the N_0 identities for each surgery branch;
* six integer quadratics whose roots in range are the only spin^c
  structures compatible with N_1 in {N_0, N_0 - 1}.

Only the conclusions of the mapping-cone arguments are encoded here
(which self-conjugate structure plays the role of t_0, which spin
structure extends over the cobordism); none of that machinery is
computed.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .exactnum import integral_roots_monic
from .lens import d_invariant, d_L_n1, normalize, self_conjugate_spins
from .linkform import essential_k

QUARTER = Fraction(1, 4)
THREE_QUARTERS = Fraction(3, 4)

# d(L(3,1), 0), the unique self-conjugate structure on the source
D_SOURCE = Fraction(1, 2)


class Definiteness(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class Branch(str, Enum):
    """Surgery branch, fixed by |n| mod 3 (and the sign of +-k when 3 | n)."""

    NULL_PLUS = "+k"  # +k surgery on a null-homologous knot, |n| = 3k
    NULL_MINUS = "-k"  # -k surgery on a null-homologous knot, |n| = 3k
    PLUS_ONE = "3k+1"  # homologically essential, |n| = 3k+1
    MINUS_ONE = "3k-1"  # homologically essential, |n| = 3k-1


class Quadratic(str, Enum):
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    B6 = "B6"

    def coefficients(self, k: int) -> tuple[int, int]:
        """(b, c) for j**2 + b*j + c."""
        return {
            "B1": (-3 * k, -(3 * k - 3)),
            "B2": (-3 * k, 3 * k + 3),
            "B3": (-(1 + 3 * k), 2 - 3 * k),
            "B4": (-(1 + 3 * k), 3 * k + 4),
            "B5": (1 - 3 * k, 4 - 3 * k),
            "B6": (1 - 3 * k, 3 * k + 2),
        }[self.value]

    def order(self, k: int) -> int:
        """|H_1| of the target; roots are sought in (0, order)."""
        return 3 * k + {"B1": 0, "B2": 0, "B3": 1, "B4": 1, "B5": -1, "B6": -1}[self.value]

    def __str__(self):
        return self.value


# (N_1 = N_0, N_1 = N_0 - 1) for each branch
QUADRATICS = {
    Branch.NULL_PLUS: (Quadratic.B1, Quadratic.B2),
    Branch.NULL_MINUS: (Quadratic.B1, Quadratic.B2),
    Branch.PLUS_ONE: (Quadratic.B3, Quadratic.B4),
    Branch.MINUS_ONE: (Quadratic.B5, Quadratic.B6),
}


@dataclass(frozen=True)
class Slope:
    a: int  # coefficient of m
    b: int  # coefficient of l


def slope_distance(s1: Slope, s2: Slope) -> int:
    return abs(s1.a * s2.b - s1.b * s2.a)


def check_local_h(V: Sequence[int]) -> None:
    """Raise ValueError unless V is non-negative with V_i >= V_{i+1} >= V_i - 1."""
    if any(v < 0 for v in V):
        raise ValueError(f"local h-invariants must be non-negative: {list(V)}")
    for i, (v, w) in enumerate(zip(V, V[1:])):
        if not v >= w >= v - 1:
            raise ValueError(f"V_{i} = {v}, V_{i + 1} = {w} violates V_i >= V_i+1 >= V_i - 1")


def ni_wu_d(d_base, p: int, i: int, V: Sequence[int]) -> Fraction:
    """d(Y_p(K), t_i) = d(Y, t) + d(L(p,1), i) - 2 max(V_i, V_{p-i}).

    ``V`` must cover indices 0..p.
    """
    if p < 1 or not 0 <= i < p:
        raise ValueError(f"need 0 <= i < p, got i={i}, p={p}")
    if len(V) < p + 1:
        raise ValueError(f"need V_0..V_{p}, got {len(V)} values")
    check_local_h(V)
    N = max(V[i], V[p - i])
    return Fraction(d_base) + d_L_n1(p, i) - 2 * N


def unknot_local_h(s: int) -> tuple[int, int]:
    """(V_s, H_s) for the unknot in S^3."""
    return max(0, -s), max(0, s)


@dataclass(frozen=True)
class EvenSpinSolution:
    i: int
    definiteness: Definiteness


def even_spin_solutions(n: int) -> set[EvenSpinSolution]:
    """Spin structures on L(n,1) that can extend over a spin two-handle
    cobordism from L(3,1), for even n.

    The cobordism is spin exactly when n is even, and then
    d(L(n,1), i) - d(L(3,1), 0) = -1/4 (positive-definite) or +1/4
    (negative-definite), where i is one of the two spin structures 0 and
    |n|/2.  With d(L(3,1), 0) = 1/2 this asks for d = 1/4 or d = 3/4.
    """
    if n == 0 or n % 2:
        raise ValueError(f"n must be even and nonzero, got {n}")
    wanted = {Definiteness.POSITIVE: QUARTER, Definiteness.NEGATIVE: THREE_QUARTERS}
    return {
        EvenSpinSolution(i, sign)
        for i in (0, abs(n) // 2)
        for sign, value in wanted.items()
        if d_L_n1(n, i) == value
    }


def cobordism_definiteness(branch: Branch) -> Definiteness:
    """Definiteness of the two-handle cobordism L(3,1) -> L(n,1)."""
    if branch in (Branch.NULL_PLUS, Branch.MINUS_ONE):
        return Definiteness.POSITIVE
    return Definiteness.NEGATIVE


@dataclass(frozen=True)
class N0Result:
    value: Fraction
    spin_index: int
    branch: Branch

    @property
    def admissible(self) -> bool:
        """N_0 must be a non-negative integer."""
        return self.value.denominator == 1 and self.value >= 0


class NoAdmissibleSpin(ValueError):
    """No self-conjugate structure on the target can play the role of t."""


def branch_for(n: int, sign: int | None = None) -> Branch:
    """Branch of n; ``sign`` (+1/-1) picks the surgery sign when 3 | n."""
    m = abs(n)
    if m % 3 == 1:
        return Branch.PLUS_ONE
    if m % 3 == 2:
        return Branch.MINUS_ONE
    if sign not in (1, -1):
        raise ValueError(f"|n| = {m} is divisible by 3; a surgery sign is required")
    return Branch.NULL_PLUS if sign > 0 else Branch.NULL_MINUS


def branch_k(n: int, branch: Branch) -> int:
    m = abs(n)
    if branch in (Branch.NULL_PLUS, Branch.NULL_MINUS):
        if m % 3:
            raise ValueError(f"branch {branch.value} needs 3 | n, got n={n}")
        return m // 3
    expected = 1 if branch is Branch.PLUS_ONE else 2
    if m % 3 != expected:
        raise ValueError(f"branch {branch.value} does not match n={n}")
    return essential_k(n)


def _essential_spin(n: int, partner_value: Fraction) -> int:
    # With two self-conjugate structures, the one not used for N_0 has a
    # fixed d-invariant (3/4 on the 3k+1 branch, 1/4 on 3k-1); t is any
    # self-conjugate index whose partners all carry that value.
    spins = sorted(self_conjugate_spins(normalize(abs(n), 1)))
    for t in spins:
        if all(d_L_n1(n, s) == partner_value for s in spins if s != t):
            return t
    raise NoAdmissibleSpin(
        f"no self-conjugate structure on L({n},1) is compatible: "
        f"the other one must have d = {partner_value}"
    )


def self_conjugate_N0(n: int, branch: Branch) -> N0Result:
    """N_0 forced on the given branch by the self-conjugate structure t_0.

    Null-homologous +-k surgery (|n| = 3k), after reversing orientation
    for -k so the Ni-Wu formula applies to +k surgery on -+L(3,1):
        2 N_0 = +-d(L(3,1), 0) + d(L(k,1), 0) - d(+-L(n,1), 0)
    |n| = 3k+1:  2 N_0 = d(L(n,1), t) + d(L(3k+1,3), 1)
    |n| = 3k-1:  2 N_0 = d(L(3k-1,3), 1) - d(L(n,1), t)
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    k = branch_k(n, branch)
    if branch in (Branch.NULL_PLUS, Branch.NULL_MINUS):
        s = 1 if branch is Branch.NULL_PLUS else -1
        two_n0 = s * D_SOURCE + d_L_n1(k, 0) - d_L_n1(s * n, 0)
        return N0Result(two_n0 / 2, 0, branch)
    if branch is Branch.PLUS_ONE:
        t = _essential_spin(n, THREE_QUARTERS)
        two_n0 = d_L_n1(n, t) + d_invariant(normalize(3 * k + 1, 3), 1 % (3 * k + 1))
    else:
        t = _essential_spin(n, QUARTER)
        two_n0 = d_invariant(normalize(3 * k - 1, 3), 1 % (3 * k - 1)) - d_L_n1(n, t)
    return N0Result(two_n0 / 2, t, branch)


def quadratic_obstruction_roots(branch: Quadratic | str, k: int) -> list[int]:
    """Integral roots in (0, |n|) of the named obstruction quadratic."""
    q = Quadratic(branch)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    b, c = q.coefficients(k)
    return integral_roots_monic(b, c, 0, q.order(k))
