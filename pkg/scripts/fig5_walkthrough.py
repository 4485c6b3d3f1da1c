"""Run the stage-wise placement on the 16-node pactus and show each stage.

    python scripts/fig5_walkthrough.py [--tie-break largest] [--dot out.dot]
"""

import argparse
import time

from sscnet.composer import min_inputs, verify_placement
from sscnet.fixtures import load
from sscnet.io import to_dot


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--tie-break", choices=("smallest", "largest"), default="smallest")
    ap.add_argument("--dot", help="write the annotated output network here")
    args = ap.parse_args()

    doc = load("fig5")
    dec = doc.pactus()
    t = time.perf_counter()
    pl = min_inputs(doc.network, dec, tie_break=args.tie_break)
    elapsed = time.perf_counter() - t

    print(f"{'stage':>5}  {'comp':>4}  {'type':<11}  {'comp. inputs':<13}  {'added':<12}  SSC nodes")
    for k, rec in enumerate(pl.per_stage, start=1):
        added = " ".join(f"{u}->{t}" for u, t in rec.externals_added) or "-"
        print(
            f"{k:>5}  G{rec.component:<3}  {rec.graph_type.value:<11}  {str(sorted(rec.component_inputs)):<13}  "
            f"{added:<12}  {sorted(rec.ssc_nodes)}"
        )
    out = doc.network.with_inputs(pl.external)
    report = verify_placement(doc.network, pl)
    print(f"\n{pl.size} external inputs in {elapsed * 1000:.1f} ms; output SSC: {report.is_ssc}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(out, "ssc-nodes"))
        print(f"wrote {args.dot}")


if __name__ == "__main__":
    main()
