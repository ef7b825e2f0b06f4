"""Command line: ``unimodshift {shift,modes,verify,scan-conjecture,replay}``.

Exit codes: 0 success; 1 a verified claim failed or a replay diverged;
2 bad input (unparsable file, non-positive d, unknown claim, unsorted grid);
3 the conjecture scan found a candidate counterexample.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from unimodshift import __version__
from unimodshift import mode_theory as mt
from unimodshift import verifier as vf
from unimodshift.formats import (
    FormatError,
    dump_json,
    format_rational,
    load_json,
    load_poly,
    parse_grid,
    parse_rational,
    poly_from_dict,
    poly_to_dict,
)
from unimodshift.sequence_core import CoeffSeq, analyze, is_nondecreasing
from unimodshift.shift_engine import shift

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CANDIDATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_d(text: str):
    try:
        d = parse_rational(text)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    if d <= 0:
        raise UsageError(f"d must be positive, got {text}")
    return d


def _load(path: str) -> CoeffSeq:
    try:
        return load_poly(path)
    except FormatError as exc:
        raise UsageError(str(exc)) from None


def _grid(text: str):
    try:
        grid = parse_grid(text)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    if any(d <= 0 for d in grid):
        raise UsageError("grid values must be positive")
    if any(a >= b for a, b in zip(grid, grid[1:])):
        raise UsageError("grid must be strictly increasing")
    return grid


def _fmt_set(xs) -> str:
    return "{" + ",".join(str(x) for x in xs) + "}"


def cmd_shift(args) -> int:
    p = _load(args.input)
    d = _positive_d(args.d)
    sys.stdout.write(dump_json(poly_to_dict(shift(p, d), label=f"shifted by {format_rational(d)}")))
    return EXIT_OK


def prediction_for(p: CoeffSeq, d) -> mt.Prediction:
    """The rule-based prediction that applies to ``p``; scaling does not move
    modes, so non-decreasing inputs are normalized to monic first."""
    if not is_nondecreasing(p)[0]:
        return mt.tail_prediction(p.m, d)
    q = p.monic()
    if q.is_all_ones:
        return mt.predict_q_modes(p.m, d)
    if q.is_pure_power:
        return mt.modes_of_power(p.m, d)
    flags = mt.PolyFlags.of(q)
    return mt.predict_general(flags.is_pure_power, flags.has_nonzero_a_m_minus_1, p.m, d, flags.is_all_ones)


def cmd_modes(args) -> int:
    p = _load(args.input)
    d = _positive_d(args.d)
    b = shift(p, d)
    an = analyze(b)
    out = [
        "coefficients: " + ", ".join(format_rational(c) for c in b.coeffs),
        f"unimodal: {str(an.is_unimodal).lower()}",
        f"modes: {_fmt_set(an.mode_set)}",
        f"M_lo: {an.m_star_lo}",
        f"M_hi: {an.m_star_hi}",
        f"m_bar: {mt.m_bar(p.m, d)}",
        f"m_under: {mt.m_under(p.m, d)}",
        f"log_concave: {str(an.is_log_concave).lower()}",
        f"strictly_log_concave: {str(an.is_strictly_log_concave).lower()}",
    ]
    if args.predict:
        pred = prediction_for(p, d)
        ok, detail = pred.holds(b, an)
        out.append(f"rule: {pred.rule}")
        out.append(f"prediction: {pred.kind} {_fmt_set(pred.indices)}")
        out.append("AGREE" if ok else f"DISAGREE ({detail})")
    print("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.claim == "all":
        claims = list(vf.THEOREMS)
    else:
        try:
            claims = [vf.ClaimId.parse(args.claim)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.d_grid not in ("standard", "targeted", "mixed") and ":" not in args.d_grid:
        _grid(args.d_grid)
    reports = []
    for claim in claims:
        rep = vf.sweep(claim, (args.m_min, args.m_max), args.d_grid, args.trials, args.seed, args.jobs)
        reports.append(rep)
        status = "ok" if rep.ok else f"{len(rep.failures)} FAILURES"
        print(f"{claim.value:11s} trials={rep.trials:7d} n/a={rep.not_applicable:7d} {status}")
    doc = {
        "artifact_version": __version__,
        "kind": "sweep",
        "reports": [r.to_dict() for r in reports],
    }
    if args.out:
        dump_json(doc, args.out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_scan_conjecture(args) -> int:
    grid = _grid(args.d_grid)
    if args.input:
        polys = [_load(args.input)]
        source = {"polys": [poly_to_dict(polys[0])]}
    elif args.family:
        source = {
            "family": args.family,
            "m_min": args.m_min,
            "m_max": args.m_max,
            "count": args.count,
            "seed": args.seed,
        }
        polys = vf.conjecture_family(args.family, (args.m_min, args.m_max), args.count, args.seed)
    else:
        raise UsageError("give an input file or --family")
    for p in polys:
        if not is_nondecreasing(p)[0]:
            raise UsageError("polynomial coefficients must be non-decreasing")
    scans = vf.scan_batch(polys, grid)
    violations = sum(len(s.violations) for s in scans)
    doc = {
        "artifact_version": __version__,
        "kind": "conjecture-scan",
        "config": {"source": source, "d_grid": [format_rational(d) for d in grid]},
        "scans": [s.to_dict() for s in scans],
        "polynomials": len(scans),
        "violations": violations,
        "digest": vf.batch_digest(scans),
    }
    if args.out:
        dump_json(doc, args.out)
    if len(scans) == 1:
        s = scans[0]
        print("M_lo: " + ",".join(map(str, s.low_modes)))
        print("M_hi: " + ",".join(map(str, s.high_modes)))
    print(f"scanned {len(scans)} polynomial(s) over {len(grid)} shift values: "
          + ("no violation found" if not violations else f"{violations} candidate violation(s)"))
    return EXIT_CANDIDATE if violations else EXIT_OK


def replay_scan(doc) -> bool:
    cfg = doc["config"]
    grid = [parse_rational(d) for d in cfg["d_grid"]]
    src = cfg["source"]
    if "polys" in src:
        polys = [poly_from_dict(p) for p in src["polys"]]
    else:
        polys = vf.conjecture_family(src["family"], (src["m_min"], src["m_max"]), src["count"], src["seed"])
    scans = vf.scan_batch(polys, grid)
    return [s.to_dict() for s in scans] == doc["scans"] and vf.batch_digest(scans) == doc["digest"]


def cmd_replay(args) -> int:
    try:
        doc = load_json(args.report)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    kind = doc.get("kind")
    if kind == "sweep":
        same = True
        for rep in doc["reports"]:
            old = vf.SweepReport.from_dict(rep)
            new = vf.replay_sweep(old.generator_config, args.jobs)
            match = old.same_verdicts(new)
            same &= match
            print(f"{old.claim.value:11s} {'identical' if match else 'DIVERGED'}")
    elif kind == "conjecture-scan":
        same = replay_scan(doc)
        print("identical" if same else "DIVERGED")
    else:
        raise UsageError(f"unknown report kind {kind!r}")
    return EXIT_OK if same else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unimodshift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shift", help="print the coefficients of P(x+d)")
    p.add_argument("input")
    p.add_argument("-d", "--d", required=True)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("modes", help="mode analysis of P(x+d)")
    p.add_argument("input")
    p.add_argument("-d", "--d", required=True)
    p.add_argument("--predict", action="store_true", help="compare with the closed-form rules")
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("verify", help="sweep a claim (or all) over generated instances")
    p.add_argument("--claim", required=True)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=25)
    p.add_argument("--d-grid", default="mixed")
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-conjecture", help="look for mode growth as d increases")
    p.add_argument("input", nargs="?")
    p.add_argument("--family", choices=["q", "power", "random"])
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d-grid", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan_conjecture)

    p = sub.add_parser("replay", help="re-derive a report and compare verdicts")
    p.add_argument("report")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
