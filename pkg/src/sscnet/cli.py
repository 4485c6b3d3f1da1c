"""Command-line front end.

Exit codes: 0 success (or SSC), 1 negative verdict, 2 usage, parse or
library error. ``SSC_THREADS`` caps the worker threads of the exact sweep.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .composer import minimality_audit, min_inputs, verify_placement
from .errors import SscError
from .exact import DEFAULT_LIMIT, is_ssc_exact
from .io import load_document, placement_json, report_json, to_dot
from .oracle import sample


def _fmt(nodes) -> str:
    return "{" + ",".join(str(v) for v in sorted(nodes)) + "}"


def cmd_check(args: argparse.Namespace) -> int:
    net = load_document(args.path).network
    report = is_ssc_exact(net, limit=args.exact_limit, require_accessible=False)
    if args.json:
        print(json.dumps(report_json(report)))
    else:
        print("SSC: yes" if report.is_ssc else f"SSC: no, witness {_fmt(report.witness)}")
        print(f"subsets examined: {report.subsets_examined}")
    return 0 if report.is_ssc else 1


def cmd_min_inputs(args: argparse.Namespace) -> int:
    doc = load_document(args.path)
    net = doc.network
    if net.inputs:
        raise SscError("min-inputs expects a document without input nodes")
    dec = doc.pactus()
    placement = min_inputs(net, dec, tie_break=args.tie_break, stage_limit=args.exact_limit)
    out = placement_json(placement, dec)
    status = 0
    if args.audit:
        report = verify_placement(net, placement, limit=args.exact_limit)
        minimal = minimality_audit(net, placement) if net.n <= args.audit_budget else None
        out["audit"] = {"verified_ssc": report.is_ssc, "minimal": minimal}
        status = 0 if report.is_ssc and minimal is not False else 1

    if args.json:
        print(json.dumps(out, indent=2))
        return status
    print("decomposition: " + "; ".join(f"G{c.index} {c.kind.value} {_fmt(c.nodes)}" for c in dec.components))
    for k, rec in enumerate(placement.per_stage, start=1):
        added = ", ".join(f"{u}->{t}" for u, t in rec.externals_added) or "none"
        print(
            f"stage {k}: G{rec.component} {rec.graph_type.value}, component inputs {_fmt(rec.component_inputs)}, "
            f"added {added}, SSC nodes {_fmt(rec.ssc_nodes)}"
        )
    print(f"external inputs ({placement.size}): " + ", ".join(f"{u}->{t}" for u, t in placement.external))
    if args.audit:
        audit = out["audit"]
        minimal = {True: "yes", False: "no", None: f"skipped (n > {args.audit_budget})"}[audit["minimal"]]
        print(f"verified SSC: {'yes' if audit['verified_ssc'] else 'no'}; minimal: {minimal}")
    return status


def cmd_oracle(args: argparse.Namespace) -> int:
    net = load_document(args.path).network
    summary = sample(net, args.trials, args.seed)
    verdict = is_ssc_exact(net, limit=args.exact_limit, require_accessible=False).is_ssc
    if verdict:
        note = "consistent" if summary.controllable == summary.trials else "INCONSISTENT: SSC but a realization is uncontrollable"
    else:
        note = "non-SSC: sampling cannot certify"
    if args.json:
        print(json.dumps({
            "trials": summary.trials,
            "controllable": summary.controllable,
            "fraction": summary.fraction,
            "krylov_disagreements": summary.disagreements,
            "is_ssc": verdict,
            "note": note,
        }))
    else:
        print(f"controllable fraction: {summary.fraction:.3f} ({summary.controllable}/{summary.trials})")
        print(f"krylov/eigen disagreements: {summary.disagreements}")
        print(f"SSC: {'yes' if verdict else 'no'}; {note}")
    return 1 if note.startswith("INCONSISTENT") else 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    doc = load_document(args.path)
    dec = doc.pactus() if args.annotate == "components" else None
    sys.stdout.write(to_dot(doc.network, args.annotate, dec, limit=args.exact_limit))
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sscnet", description="Strong structural controllability of diffusive networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("path", help="network document (JSON)")
        p.add_argument("--exact-limit", type=int, default=DEFAULT_LIMIT, help="largest n for exhaustive checks")
        p.set_defaults(func=func)
        return p

    p = command("check", cmd_check, "exact SSC verdict")
    p.add_argument("--json", action="store_true")

    p = command("min-inputs", cmd_min_inputs, "place the fewest external inputs on a pactus")
    p.add_argument("--tie-break", choices=("smallest", "largest"), default="smallest")
    p.add_argument("--audit", action="store_true", help="verify the placement and search for a smaller one")
    p.add_argument("--audit-budget", type=int, default=12)
    p.add_argument("--json", action="store_true")

    p = command("oracle", cmd_oracle, "sample weighted realizations and test controllability")
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = command("export-dot", cmd_export_dot, "render the network as DOT")
    p.add_argument("--annotate", choices=("ssc-nodes", "components"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
