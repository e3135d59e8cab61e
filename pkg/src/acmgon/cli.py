"""Command-line front end.

Exit codes: 0 success, 1 input error or undetermined gonality, 2 verification failure.
Negative integers (characters, cubic classes) must follow a ``--`` separator.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import atlas, oracle
from .character import (
    AcmCubicType, GammaCharacter, classify_acm_cubic, degree_of, genus_of, validate,
)
from .engine import CurveRecord, GonStatus, build_record
from .errors import AcmError
from .family import Degeneration, DerivationChain, corollary_condition, family_lower_bound, verify_chain
from .lattice import QuadricClass, parse_cubic


def _render_record_text(rec: CurveRecord) -> str:
    lines = [f"{key}: {'-' if val is None else val}" for key, val in rec.to_dict().items()]
    if rec.witnesses:
        lines.append(f"witnesses: {' '.join(rec.witnesses)}")
    if rec.gon_bounds is not None:
        lines.append(f"gon_bounds: {rec.gon_bounds[0]}..{rec.gon_bounds[1]}")
    return "\n".join(lines)


def _build_curve(kind: str, values: list[str]) -> CurveRecord:
    ints = lambda vs: [int(v) for v in vs]  # noqa: E731
    if kind == "plane":
        if len(values) != 1:
            raise AcmError("usage: curve plane <d>")
        return build_record(ints(values)[0])
    if kind == "quadric":
        if len(values) != 2:
            raise AcmError("usage: curve quadric <a> <b>")
        return build_record(QuadricClass(*ints(values)))
    if kind == "cubic":
        return build_record(parse_cubic(values))
    if len(values) != 2:
        raise AcmError("usage: curve acm <family> <shift>")
    return build_record(AcmCubicType(values[0].upper(), int(values[1])))


def cmd_curve(args) -> int:
    rec = _build_curve(args.kind, args.values)
    if args.format == "json":
        obj = rec.to_dict()
        if args.trace and rec.trace is not None:
            obj = {"record": obj, "trace": rec.trace.to_json_obj()}
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        print(atlas.records_to_csv([(rec.trace_id or "", rec, "")]), end="")
    else:
        print(_render_record_text(rec))
        if args.trace and rec.trace is not None:
            print("trace:")
            print(rec.trace.to_json(indent=2))
    if rec.gon_status is GonStatus.LOWER_UPPER_GAP:
        print("gonality undetermined", file=sys.stderr)
        return 1
    return 0


def cmd_classify(args) -> int:
    g = GammaCharacter.parse(" ".join(args.values))
    report = validate(g)
    out = {"character": str(g), "valid": report.valid, "s0": report.s0,
           "violations": list(report.violations)}
    if report.valid:
        out["degree"] = degree_of(g)
        out["genus"] = genus_of(g)
        if report.s0 == 3:
            t = classify_acm_cubic(g)
            out["family"] = t.family.value
            out["shift"] = t.shift
        else:
            out["note"] = "not a cubic-surface ACM character"
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"character: {g}")
        print(f"valid: {'yes' if report.valid else 'no'}")
        for v in report.violations:
            print(f"  violation: {v}")
        if report.valid:
            print(f"s0: {report.s0}")
            print(f"degree: {out['degree']}")
            print(f"genus: {out['genus']}")
            if "family" in out:
                print(f"type: {out['family']} shift {out['shift']}")
            else:
                print(out["note"])
    return 0 if report.valid else 1


def cmd_table(args) -> int:
    if args.max_degree < 6:
        print("error: --max-degree must be >= 6", file=sys.stderr)
        return 1
    records = atlas.acm_table(args.max_degree)
    if args.format == "json":
        print(atlas.records_to_json(records))
    elif args.format == "csv":
        print(atlas.table_csv(records), end="")
    else:
        cols = ["trace_id", "class", "d", "g", "gon", "k_on_surface", "cliff", "cliff_status"]
        rows = [[str(r.to_dict()[c]) for c in cols] for r in records]
        widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
        print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        for row in rows:
            print("  ".join(v.ljust(w) for v, w in zip(row, widths)))
    return 0


def cmd_bound(args) -> int:
    if min(args.s, args.gon1, args.gon2) < 1 or (args.gont is not None and args.gont < 1):
        print("error: all arguments must be positive integers", file=sys.stderr)
        return 1
    dg = Degeneration(args.s, args.gon1, args.gon2)
    bound = family_lower_bound(dg)
    regime = None if args.gont is None else corollary_condition(dg, args.gont)
    if args.format == "json":
        print(json.dumps({"bound": bound, "corollary_regime": regime}))
    else:
        print(bound)
        if regime is not None:
            print(f"corollary regime: {'yes' if regime else 'no'}")
    return 0


def cmd_verify(args) -> int:
    reports = oracle.run_all(args.line_bound, args.max_len, args.max_shift)
    if args.format == "json":
        print(oracle.reports_to_json(reports))
    else:
        for r in reports:
            print(r.summary_line())
            for inp, expected, got in r.mismatches:
                print(f"    {inp}: expected {expected}, got {got}")
    return 0 if all(r.passed for r in reports) else 2


def cmd_chain(args) -> int:
    if args.file == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    report = verify_chain(DerivationChain.from_json(data, args.file))
    if report.passed:
        print("chain verified")
        for c in report.certificates:
            print(f"  {c}")
        return 0
    print(f"chain fails at step {report.failed_step}: {report.reason}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(prog="acmgon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", parents=[common], help="invariants of a single curve")
    p.add_argument("kind", choices=("plane", "quadric", "cubic", "acm"))
    p.add_argument("values", nargs="+")
    p.add_argument("--trace", action="store_true", help="append the derivation chain")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("classify", parents=[common], help="validate and classify a gamma character")
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", parents=[common], help="table of the four ACM families")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bound", parents=[common], help="degeneration lower bound min(s, gon1 + gon2)")
    p.add_argument("s", type=int)
    p.add_argument("gon1", type=int)
    p.add_argument("gon2", type=int)
    p.add_argument("--gont", type=int, default=None, help="gonality of the general member")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="run every oracle and chain check")
    p.add_argument("--line-bound", type=int, default=oracle.DEFAULT_LINE_BOUND)
    p.add_argument("--max-len", type=int, default=oracle.DEFAULT_MAX_LEN)
    p.add_argument("--max-shift", type=int, default=oracle.DEFAULT_MAX_SHIFT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-chain", parents=[common], help="verify a chain read from a JSON file")
    p.add_argument("file", help="path, or - for stdin")
    p.set_defaults(func=cmd_chain)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AcmError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
