"""Decide, for each nonzero n, whether L(n,1) survives every obstruction to
being a distance-one surgery on L(3,1).

Every check is run (no short-circuiting) so the trace shows all values;
the verdict is decided by the unscoped records.  When 3 | n the surgery
coefficient is +k or -k and each sign is traced in its own scope; n is
obstructed only when both signs are.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .exactnum import fmt_rational
from .linkform import filling_linking_form, linking_forms_equivalent, target_linking_form
from .surgery import (
    QUADRATICS,
    Branch,
    NoAdmissibleSpin,
    branch_for,
    branch_k,
    cobordism_definiteness,
    even_spin_solutions,
    quadratic_obstruction_roots,
    self_conjugate_N0,
)

THEOREM_SET = frozenset({-6, -2, -1, 1, 2, 3, 4, 7})


class Outcome(str, Enum):
    OBSTRUCTS = "obstructs"
    PASSES = "passes"
    INCONCLUSIVE = "inconclusive"


class Verdict(str, Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"


# citation strings carried by every check record
CITE = {
    "torsion_free": "surgery on a knot in L(3,1) never has torsion-free H_1",
    "homology": "H_1 of distance-one fillings of L(3,1): |n| mod 3 fixes the knot class",
    "gcd_filter": "null-homologous surgery gives Z/3 + Z/k, cyclic only if gcd(k,3)=1",
    "definiteness": "spin two-handle cobordisms between L-spaces shift d by -+1/4 (Lin; Ozsvath-Szabo)",
    "linking_form": "torsion linking form of the filling (3k+-1)m + kl versus sign(n)/|n|",
    "n0_rule": "Ni-Wu d-invariant surgery formula and its homologically essential analogues",
    "quadratic": "Rasmussen monotonicity V_1 in {V_0, V_0 - 1} forces an integral root",
    "sign_exhaustion": "3 | n: the surgery coefficient is +k or -k; both must be obstructed",
}

DEFAULT_ORDER = ("definiteness", "linking_form", "n0_rule")


@dataclass
class CheckRecord:
    check_name: str
    inputs: dict
    outcome: Outcome
    citation: str
    scope: Optional[str] = None  # "+k" / "-k" inside a sign branch

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "scope": self.scope,
            "inputs": self.inputs,
            "outcome": self.outcome.value,
            "citation": self.citation,
        }


@dataclass
class ObstructionReport:
    n: int
    verdict: Verdict
    firing_check: Optional[str]
    trace: list = field(default_factory=list)
    witness: Optional[str] = None
    n0: Optional[Fraction] = None

    @property
    def obstructed(self) -> bool:
        return self.verdict is Verdict.OBSTRUCTED

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "verdict": self.verdict.value,
            "firing_check": self.firing_check,
            "N0": None if self.n0 is None else fmt_rational(self.n0),
            "witness": self.witness,
            "trace": [r.to_dict() for r in self.trace],
        }

    def summary(self) -> str:
        if self.obstructed:
            return f"Obstructed (check: {self.firing_check})"
        return f"NotObstructed (witness: {self.witness})"


def _record(name, inputs, outcome, scope=None):
    return CheckRecord(name, inputs, outcome, CITE[name], scope)


# -- individual checks ------------------------------------------------------


def check_homology(n: int) -> CheckRecord:
    m = abs(n)
    inputs = {"n": n, "|n| mod 3": m % 3}
    if m == 1:
        inputs["note"] = "S^3"
    return _record("homology", inputs, Outcome.PASSES)


def check_gcd(n: int) -> CheckRecord:
    k = abs(n) // 3
    g = gcd(k, 3)
    outcome = Outcome.PASSES if g == 1 else Outcome.OBSTRUCTS
    return _record("gcd_filter", {"k": k, "gcd(k,3)": g}, outcome)


def check_definiteness(n: int, branch: Branch, scope=None) -> CheckRecord:
    """Even n only: the cobordism's actual definiteness must match a
    spin structure that extends over it."""
    actual = cobordism_definiteness(branch)
    sols = even_spin_solutions(n)
    ok = any(s.definiteness is actual for s in sols)
    inputs = {
        "definiteness": actual.value,
        "solutions": [f"(i={s.i}, {s.definiteness.value})" for s in sorted(sols, key=lambda s: s.i)],
    }
    return _record("definiteness", inputs, Outcome.PASSES if ok else Outcome.OBSTRUCTS, scope)


def check_linking_form(n: int) -> CheckRecord:
    f, g = filling_linking_form(n), target_linking_form(n)
    ok = linking_forms_equivalent(f, g)
    inputs = {"filling": str(f), "target": str(g), "equivalent": ok}
    if f.p > 1:
        # the forms agree iff this ratio is a square unit mod |n|
        inputs["ratio"] = f.q * pow(g.q, -1, f.p) % f.p
    return _record("linking_form", inputs, Outcome.PASSES if ok else Outcome.OBSTRUCTS)


# k-ranges in which each null-homologous case is proved; outside them a
# failing check is only inconclusive
_NULL_GUARDS = {
    (1, Branch.NULL_PLUS): lambda k: k >= 2,
    (-1, Branch.NULL_MINUS): lambda k: k >= 1,
    (1, Branch.NULL_MINUS): lambda k: k >= 2,
    (-1, Branch.NULL_PLUS): lambda k: k == 1 or k > 2,
}

# null-homologous cases that go on to the quadratic step
_NULL_QUADRATIC = {(1, Branch.NULL_MINUS), (-1, Branch.NULL_PLUS)}


def _in_guard(n: int, branch: Branch, k: int) -> bool:
    if branch in (Branch.PLUS_ONE, Branch.MINUS_ONE):
        return True
    return _NULL_GUARDS[(1 if n > 0 else -1, branch)](k)


def check_n0(n: int, branch: Branch, scope=None):
    """Returns (record, N0Result or None)."""
    k = branch_k(n, branch)
    try:
        res = self_conjugate_N0(n, branch)
    except NoAdmissibleSpin as exc:
        return _record("n0_rule", {"k": k, "error": str(exc)}, Outcome.OBSTRUCTS, scope), None
    inputs = {"k": k, "spin": res.spin_index, "N0": fmt_rational(res.value)}
    if res.admissible:
        outcome = Outcome.PASSES
    elif _in_guard(n, branch, k):
        outcome = Outcome.OBSTRUCTS
    else:
        outcome = Outcome.INCONCLUSIVE
    return _record("n0_rule", inputs, outcome, scope), res


def check_quadratic(n: int, branch: Branch, scope=None) -> CheckRecord:
    k = branch_k(n, branch)
    roots = {q.value: quadratic_obstruction_roots(q, k) for q in QUADRATICS[branch]}
    inputs = {"k": k, "roots": roots}
    if any(roots.values()):
        outcome = Outcome.PASSES
    elif _in_guard(n, branch, k):
        outcome = Outcome.OBSTRUCTS
    else:
        outcome = Outcome.INCONCLUSIVE
    return _record("quadratic", inputs, outcome, scope)


def _wants_quadratic(n: int, branch: Branch, n0) -> bool:
    if n0 is None or not n0.admissible:
        return False
    if branch in (Branch.NULL_PLUS, Branch.NULL_MINUS):
        return (1 if n > 0 else -1, branch) in _NULL_QUADRATIC
    return n0.value >= 2


def _branch_checks(n: int, branch: Branch, order, scope=None):
    """Trace for one branch; returns (records, N0Result or None)."""
    found = {}
    n0 = None
    for name in order:
        if name == "definiteness" and n % 2 == 0:
            found[name] = check_definiteness(n, branch, scope)
        elif name == "linking_form" and branch in (Branch.PLUS_ONE, Branch.MINUS_ONE):
            found[name] = check_linking_form(n)
        elif name == "n0_rule":
            if branch is Branch.PLUS_ONE and n % 2 == 0:
                # the 3k+1 identity needs odd order; the even case is settled by definiteness
                found[name] = _record(
                    "n0_rule", {"k": branch_k(n, branch), "note": "even order"},
                    Outcome.INCONCLUSIVE, scope,
                )
            else:
                found[name], n0 = check_n0(n, branch, scope)
    records = [found[name] for name in order if name in found]
    if _wants_quadratic(n, branch, n0):
        records.append(check_quadratic(n, branch, scope))
    return records, n0


def _obstructing(records: Iterable[CheckRecord]):
    return next((r for r in records if r.outcome is Outcome.OBSTRUCTS), None)


def classify(n: int, order=DEFAULT_ORDER) -> ObstructionReport:
    """Run every applicable obstruction for L(n,1) and return a traced report.

    ``order`` permutes the independent checks (definiteness, linking form,
    N_0); it changes which check is reported as firing, never the verdict.
    """
    if sorted(order) != sorted(DEFAULT_ORDER):
        raise ValueError(f"order must be a permutation of {DEFAULT_ORDER}")
    if n == 0:
        rec = _record("torsion_free", {"n": 0}, Outcome.OBSTRUCTS)
        return ObstructionReport(0, Verdict.OBSTRUCTED, rec.check_name, [rec])

    trace = [check_homology(n)]
    n0_value = None
    if abs(n) == 1:
        pass
    elif abs(n) % 3 == 0:
        gcd_rec = check_gcd(n)
        trace.append(gcd_rec)
        if gcd_rec.outcome is not Outcome.OBSTRUCTS:
            fates = {}
            for sign in (1, -1):
                branch = branch_for(n, sign)
                records, n0 = _branch_checks(n, branch, order, scope=branch.value)
                trace.extend(records)
                hit = _obstructing(records)
                fates[branch.value] = hit.check_name if hit else "survives"
                if hit is None and n0_value is None and n0 is not None:
                    n0_value = n0.value
            both = all(f != "survives" for f in fates.values())
            trace.append(_record(
                "sign_exhaustion", fates, Outcome.OBSTRUCTS if both else Outcome.PASSES,
            ))
    else:
        records, n0 = _branch_checks(n, branch_for(n), order)
        trace.extend(records)
        if n0 is not None:
            n0_value = n0.value

    hit = _obstructing(r for r in trace if r.scope is None)
    if hit is not None:
        return ObstructionReport(n, Verdict.OBSTRUCTED, hit.check_name, trace, n0=n0_value)

    from .band import witness_for  # band imports this module

    entry = witness_for(n)
    return ObstructionReport(
        n, Verdict.NOT_OBSTRUCTED, None, trace,
        witness=entry.label if entry else None, n0=n0_value,
    )


def rerun_firing_check(report: ObstructionReport) -> CheckRecord:
    """Re-execute only the check that fired for an obstructed report."""
    n, name = report.n, report.firing_check
    if name == "torsion_free":
        return classify(0).trace[0]
    if name == "gcd_filter":
        return check_gcd(n)
    if name == "linking_form":
        return check_linking_form(n)
    if name == "definiteness":
        return check_definiteness(n, branch_for(n))
    if name == "n0_rule":
        return check_n0(n, branch_for(n))[0]
    if name == "quadratic":
        return check_quadratic(n, branch_for(n))
    if name == "sign_exhaustion":
        fates = {}
        for sign in (1, -1):
            branch = branch_for(n, sign)
            hit = _obstructing(_branch_checks(n, branch, DEFAULT_ORDER, branch.value)[0])
            fates[branch.value] = hit.check_name if hit else "survives"
        both = all(f != "survives" for f in fates.values())
        return _record("sign_exhaustion", fates, Outcome.OBSTRUCTS if both else Outcome.PASSES)
    raise ValueError(f"report for n={n} has no firing check")


@dataclass
class ScanResult:
    lo: int
    hi: int
    reports: list

    def __iter__(self):
        return iter(self.reports)

    def __len__(self):
        return len(self.reports)

    @property
    def not_obstructed(self) -> list[int]:
        return [r.n for r in self.reports if not r.obstructed]

    @property
    def expected(self) -> list[int]:
        return sorted(n for n in THEOREM_SET if self.lo <= n <= self.hi)

    @property
    def matches_theorem(self) -> bool:
        return self.not_obstructed == self.expected

    def summary(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "classified": len(self.reports),
            "not_obstructed": self.not_obstructed,
            "expected": self.expected,
            "matches": self.matches_theorem,
        }


def scan(lo: int, hi: int) -> ScanResult:
    """Classify every nonzero n in [lo, hi]."""
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    return ScanResult(lo, hi, [classify(n) for n in range(lo, hi + 1) if n != 0])
