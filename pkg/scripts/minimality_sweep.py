"""How often is the stage-wise placement minimal on random pactus graphs?

Every placement is verified SSC. Non-minimal ones are re-run under every
connected component order and, with --decompositions, under every valid
decomposition, to see whether the optimum is reachable at all.

    python scripts/minimality_sweep.py --instances 200 --seed 0 --decompositions
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from sscnet import is_ssc_exact
from sscnet.composer import connected_orders, min_inputs, minimality_audit, verify_placement
from sscnet.generators import random_pactus
from sscnet.pactus import all_decompositions


@dataclass
class SweepConfig:
    instances: int = 200
    seed: int = 0
    max_n: int = 12
    max_m: int = 4
    decompositions: bool = False


def fewest(net) -> int:
    for k in range(1, net.n + 1):
        for ts in combinations(net.state_nodes, k):
            if is_ssc_exact(net.with_inputs((f"a{t}", t) for t in ts), require_accessible=False).is_ssc:
                return k
    raise AssertionError("inputs on every node are always SSC")


def classify(net, dec, cfg: SweepConfig) -> str:
    pl = min_inputs(net, dec)
    if not verify_placement(net, pl).is_ssc:
        return "unsound"
    if minimality_audit(net, pl, budget=cfg.max_n):
        return "minimal"
    best = fewest(net)
    if min(min_inputs(net, dec, order=o).size for o in connected_orders(dec)) == best:
        return "order"
    if cfg.decompositions and min(min_inputs(net, d).size for d in all_decompositions(net)) == best:
        return "decomposition"
    return "other"


def run(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.instances):
        net, dec = random_pactus(rng, cfg.max_n, cfg.max_m)
        tally[classify(net, dec, cfg)] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser()
    for name, default in vars(SweepConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--{name}", action="store_true")
        else:
            ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    tally = run(cfg)
    print(f"{cfg.instances} instances (seed {cfg.seed}, n <= {cfg.max_n}, m <= {cfg.max_m})")
    labels = {
        "minimal": "minimal",
        "order": "optimum under another component order",
        "decomposition": "optimum under another decomposition",
        "other": "optimum not reached" + ("" if cfg.decompositions else " (decompositions not searched)"),
        "unsound": "placement not SSC",
    }
    for key, text in labels.items():
        print(f"  {tally[key]:>5}  {text}")


if __name__ == "__main__":
    main()
