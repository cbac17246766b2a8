"""Command-line front end.

    lensurgery d --p 3 --q 1 --spin 0
    lensurgery classify --n -6 --trace
    lensurgery scan --from -200 --to 200 --check-theorem
    lensurgery band --n 7 --non-coherent --json

Exit status: 0 on success, 1 when ``scan --check-theorem`` finds a
mismatch, 2 on argument errors.
"""

import argparse
import csv
import io
import json
import sys

from .band import banding_possible
from .classify import CITE, THEOREM_SET, classify, scan
from .exactnum import fmt_rational
from .lens import conjugate_spin, d_invariant, normalize, self_conjugate_spins
from .linkform import filling_linking_form, linking_forms_equivalent, target_linking_form

LENS_CITATION = "Ozsvath-Szabo recursion for d-invariants of lens spaces"
SELF_CONJ_CITATION = "self-conjugate spin^c structures on L(p,q): integers among (p+q-1)/2, (q-1)/2"
BAND_CITATION = "Montesinos trick: bandings lift to distance-one surgeries on branched double covers"
THEOREM_CITATION = "L(n,1) is a distance-one surgery on L(3,1) iff n in {-6,-2,-1,1,2,3,4,7}"

CSV_COLUMNS = ("n", "verdict", "firing_check", "N0", "witness")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def output_record(command: str, inputs: dict, result, citations) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "citations": list(citations)}


def render_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset after it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON record")
    common.add_argument("--csv", action="store_true", default=argparse.SUPPRESS,
                        help="emit CSV (scan only)")

    parser = _Parser(prog="lensurgery", parents=[common],
                     description="Exact d-invariants and L(3,1) surgery obstructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("d", parents=[common], help="d-invariants of L(p,q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--spin", type=int)
    which.add_argument("--all", action="store_true")

    p = sub.add_parser("spins", parents=[common], help="self-conjugate spin^c structures")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("linkform", parents=[common], help="filling vs target linking forms")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("classify", parents=[common], help="obstruction report for L(n,1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("scan", parents=[common], help="classify a range of n")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--check-theorem", action="store_true")

    p = sub.add_parser("band", parents=[common], help="banding from T(2,3) to T(2,n)")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--coherent", dest="coherent", action="store_true")
    kind.add_argument("--non-coherent", dest="coherent", action="store_false")
    return parser


def _cmd_d(args):
    L = normalize(args.p, args.q)
    if args.spin is not None:
        if not 0 <= args.spin < L.p:
            raise UsageError(f"--spin must be in [0, {L.p}) for {L}")
        spins = [args.spin]
    else:
        spins = list(L.spins())
    values = {str(i): fmt_rational(d_invariant(L, i)) for i in spins}
    inputs = {"p": args.p, "q": args.q, "lens_space": str(L), "spin": args.spin}
    if args.spin is not None:
        text = values[str(args.spin)]
    else:
        text = "\n".join(f"d({L}, {i}) = {v}" for i, v in values.items())
    return 0, text, output_record("d", inputs, values, [LENS_CITATION])


def _cmd_spins(args):
    L = normalize(args.p, args.q)
    sc = sorted(self_conjugate_spins(L))
    pairs = {str(i): conjugate_spin(L, i) for i in L.spins()} if L.p <= 64 else None
    result = {"lens_space": str(L), "self_conjugate": sc}
    if pairs is not None:
        result["conjugation"] = pairs
    text = f"{L}: self-conjugate spin^c " + ", ".join(map(str, sc))
    return 0, text, output_record("spins", {"p": args.p, "q": args.q}, result, [SELF_CONJ_CITATION])


def _cmd_linkform(args):
    if abs(args.n) % 3 == 0:
        raise UsageError("linkform needs |n| not divisible by 3 (null-homologous case has no filling form)")
    f, g = filling_linking_form(args.n), target_linking_form(args.n)
    eq = linking_forms_equivalent(f, g)
    result = {"filling": str(f), "target": str(g), "equivalent": eq}
    text = f"filling {f}  target {g}  " + ("equivalent" if eq else "not equivalent")
    return 0, text, output_record("linkform", {"n": args.n}, result, [CITE["linking_form"]])


def _trace_lines(report):
    for r in report.trace:
        scope = f"[{r.scope}] " if r.scope else ""
        inputs = ", ".join(f"{k}={v}" for k, v in r.inputs.items())
        yield f"  {scope}{r.check_name}: {r.outcome.value}  ({inputs})"


def _cmd_classify(args):
    report = classify(args.n)
    lines = [report.summary()]
    if args.trace:
        lines.extend(_trace_lines(report))
    citations = sorted({r.citation for r in report.trace})
    return 0, "\n".join(lines), output_record("classify", {"n": args.n}, report.to_dict(), citations)


def _cmd_scan(args):
    if args.lo > args.hi:
        raise UsageError("--from must not exceed --to")
    res = scan(args.lo, args.hi)
    status = 1 if args.check_theorem and not res.matches_theorem else 0
    inputs = {"from": args.lo, "to": args.hi, "check_theorem": args.check_theorem}
    result = {
        "reports": [
            {"n": r.n, "verdict": r.verdict.value, "firing_check": r.firing_check,
             "N0": None if r.n0 is None else fmt_rational(r.n0), "witness": r.witness}
            for r in res
        ],
        "summary": res.summary(),
    }
    if getattr(args, "csv", False):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in result["reports"]:
            w.writerow(["" if row[c] is None else row[c] for c in CSV_COLUMNS])
        return status, buf.getvalue().rstrip("\n"), None

    lines = [f"{r.n:>6}  {r.summary()}" for r in res]
    s = res.summary()
    lines.append(f"NotObstructed: {s['not_obstructed']}")
    if args.check_theorem:
        lines.append(f"expected:      {s['expected']}")
        lines.append("theorem check: " + ("OK" if s["matches"] else "MISMATCH"))
    return status, "\n".join(lines), output_record("scan", inputs, result, [THEOREM_CITATION])


def _cmd_band(args):
    v = banding_possible(args.n, args.coherent)
    kind = "coherent" if args.coherent else "non-coherent"
    if v.possible:
        text = f"possible ({kind}); witness: {v.witness}"
    else:
        text = f"impossible ({kind}); reason: {v.reason}"
    inputs = {"n": args.n, "coherent": args.coherent}
    return 0, text, output_record("band", inputs, v.to_dict(), [BAND_CITATION, THEOREM_CITATION])


_COMMANDS = {
    "d": _cmd_d,
    "spins": _cmd_spins,
    "linkform": _cmd_linkform,
    "classify": _cmd_classify,
    "scan": _cmd_scan,
    "band": _cmd_band,
}


def run(argv) -> tuple[int, str]:
    """Parse and execute; returns (exit status, rendered output)."""
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "csv", False) and args.command != "scan":
            raise UsageError("--csv is only supported by scan")
        status, text, record = _COMMANDS[args.command](args)
    except UsageError as exc:
        return 2, str(exc)
    except (ValueError, IndexError) as exc:
        return 2, f"lensurgery: error: {exc}"
    if getattr(args, "json", False) and record is not None:
        return status, render_json(record)
    return status, text


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # prints help and exits 0
    status, text = run(argv)
    print(text, file=sys.stderr if status == 2 else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
