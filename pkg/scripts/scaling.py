"""Wall-clock of the exact sweep against n, and of the stage loop against m.

    python scripts/scaling.py --max-n 22 --max-m 40
"""

import argparse
import random
import time

from sscnet import build_network, is_ssc_exact
from sscnet.composer import min_inputs
from sscnet.pactus import decompose


def exact_timings(max_n: int) -> None:
    print(f"{'n':>3}  {'subsets':>10}  {'seconds':>8}")
    for n in range(10, max_n + 1, 2):
        net = build_network(range(1, n + 1), [(k, k + 1) for k in range(1, n)], [("u1", 1)])
        t = time.perf_counter()
        report = is_ssc_exact(net, limit=max_n)
        print(f"{n:>3}  {report.subsets_examined:>10}  {time.perf_counter() - t:>8.3f}")


def chain(m: int, rng: random.Random):
    """m components in a row, alternating 4-cycles and 3-paths, one bridge each."""
    nodes, edges, groups, at = [], [], [], 1
    for k in range(m):
        size = 4 if k % 2 == 0 else 3
        block = list(range(at, at + size))
        at += size
        nodes += block
        edges += list(zip(block, block[1:]))
        if size == 4:
            edges.append((block[-1], block[0]))
        if groups:
            edges.append((rng.choice(groups[-1][0]), rng.choice(block)))
        groups.append((block, "cycle" if size == 4 else "path"))
    net = build_network(nodes, edges)
    return net, decompose(net, groups)


def stage_timings(max_m: int) -> None:
    rng = random.Random(0)
    print(f"\n{'m':>3}  {'n':>4}  {'inputs':>6}  {'seconds':>8}")
    for m in range(5, max_m + 1, 5):
        net, dec = chain(m, rng)
        t = time.perf_counter()
        pl = min_inputs(net, dec)
        print(f"{m:>3}  {net.n:>4}  {pl.size:>6}  {time.perf_counter() - t:>8.3f}")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=22)
    ap.add_argument("--max-m", type=int, default=40)
    args = ap.parse_args()
    exact_timings(args.max_n)
    stage_timings(args.max_m)


if __name__ == "__main__":
    main()
