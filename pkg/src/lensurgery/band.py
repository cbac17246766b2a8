"""Band surgeries from the right-handed trefoil T(2,3) to torus links T(2,n).

L(n,1) is the branched double cover of T(2,n), and a band move lifts to
a distance-one surgery (Montesinos trick), so every surgery obstruction
is a banding obstruction.  Coherent bands change the number of
components and non-coherent ones do not, which fixes the parity of n.

Witnesses are recorded as text describing the known bandings; the band
diagrams themselves are not checked here.
"""

from dataclasses import dataclass
from typing import Optional

from .exactnum import is_square_mod


@dataclass(frozen=True)
class TorusLink:
    n: int

    @property
    def components(self) -> int:
        return 2 if self.n % 2 == 0 else 1

    @property
    def determinant(self) -> int:
        return abs(self.n)


@dataclass(frozen=True)
class WitnessEntry:
    n: int
    coherent: bool
    label: str
    description: str


_CATALOG = (
    WitnessEntry(1, False, "Figure 2 non-coherent banding",
                 "T(2,3) to the unknot T(2,1)"),
    WitnessEntry(-1, False, "Figure 2 non-coherent banding (mirrored)",
                 "T(2,3) to the unknot T(2,-1); mirror of the n = 1 banding"),
    WitnessEntry(3, False, "Figure 2 non-coherent banding",
                 "T(2,n) to itself at n = 3"),
    WitnessEntry(7, False, "Figure 2 non-coherent banding",
                 "T(2,n-2) to T(2,n+2) at n = 5: T(2,3) to T(2,7)"),
    WitnessEntry(2, True, "Figure 3 coherent banding",
                 "T(2,3) to the Hopf link T(2,2)"),
    WitnessEntry(-2, True, "Figure 3 coherent banding",
                 "T(2,3) to the Hopf link T(2,-2) (T(2,2) with one component reversed)"),
    WitnessEntry(4, True, "Figure 3 coherent banding",
                 "T(2,3) to T(2,4)"),
    WitnessEntry(-6, True, "Figure 3 coherent banding",
                 "T(2,-6) to T(2,3)"),
)


def witness_catalog() -> list[WitnessEntry]:
    return list(_CATALOG)


def witness_for(n: int, coherent: Optional[bool] = None) -> Optional[WitnessEntry]:
    for entry in _CATALOG:
        if entry.n == n and (coherent is None or entry.coherent == coherent):
            return entry
    return None


@dataclass(frozen=True)
class BandVerdict:
    possible: bool
    reason: str  # "realized", "parity-mismatch" or "surgery-obstruction"
    witness: Optional[str] = None
    firing_check: Optional[str] = None

    def __post_init__(self):
        if self.possible and not self.witness:
            raise ValueError("a realizable banding needs a witness")

    def to_dict(self) -> dict:
        return {
            "possible": self.possible,
            "reason": self.reason,
            "witness": self.witness,
            "firing_check": self.firing_check,
        }


def banding_possible(n: int, coherent: bool) -> BandVerdict:
    """Can T(2,3) be turned into T(2,n) by one band move of the given kind?"""
    from .classify import classify

    if n == 0:
        raise ValueError("n must be nonzero")
    # coherent bands change the component count: knot -> 2-component link
    if (TorusLink(n).components == 2) != coherent:
        return BandVerdict(False, "parity-mismatch")
    report = classify(n)
    if report.obstructed:
        return BandVerdict(False, "surgery-obstruction", firing_check=report.firing_check)
    entry = witness_for(n, coherent)
    if entry is None:
        # surgery exists but no banding is on record; don't claim one
        return BandVerdict(False, "surgery-obstruction")
    return BandVerdict(True, "realized", f"{entry.label}: {entry.description}")


def kanenobu_check(det_k: int, det_l: int) -> bool:
    """Kanenobu's criterion for a banding from an unknotting-number-one
    knot K to L: 2 det(L) or -2 det(L) must be a square mod det(K).

    True means this test does not obstruct.
    """
    if det_k < 1:
        raise ValueError(f"det(K) must be positive, got {det_k}")
    if det_k == 1:
        return True
    return is_square_mod(2 * det_l, det_k) or is_square_mod(-2 * det_l, det_k)
