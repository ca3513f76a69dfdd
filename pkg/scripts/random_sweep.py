"""Measure how far greedy play lands from optimal on random instances.

Draws seeded random winnable instances, solves each exactly, and prints the
distribution of the greedy/optimal ratio next to the worst case found.

    python scripts/random_sweep.py --count 300 --max-n 6
"""

import argparse
from collections import Counter
from fractions import Fraction

from dollargame import borrowing_binge, random_instance, verify_bound


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200,
                    help="winnable instances to collect (default 200)")
    ap.add_argument("--max-n", type=int, default=6,
                    help="largest vertex count (default 6)")
    ap.add_argument("--chips", type=int, nargs=2, default=(-3, 3),
                    metavar=("LO", "HI"), help="chip range (default -3 3)")
    ap.add_argument("--seed", type=int, default=0,
                    help="first generator seed (default 0)")
    args = ap.parse_args()

    ratios: Counter = Counter()
    tight = 0
    zero_m0 = 0
    worst = (Fraction(0), None)
    seed = args.seed
    collected = 0
    while collected < args.count:
        n = 2 + seed % (args.max_n - 1)
        p = 0.3 + 0.1 * ((seed // 5) % 6)
        inst = random_instance(n, round(p, 1), tuple(args.chips), seed)
        seed += 1
        trace = borrowing_binge(inst.graph, inst.divisor, keep_states=False)
        if trace.status != "won":
            continue
        collected += 1
        report = verify_bound(inst.graph, inst.divisor)
        if report.m0 == 0:
            zero_m0 += 1
            continue
        ratio = Fraction(report.m0, report.m_min)
        ratios[ratio] += 1
        if report.tight:
            tight += 1
        if ratio > worst[0]:
            worst = (ratio, inst.name)

    print(f"collected {collected} winnable instances "
          f"(n <= {args.max_n}, chips in {list(args.chips)})")
    print(f"already effective at the start: {zero_m0}")
    print(f"bound met with equality: {tight}")
    print("m0/m_min distribution:")
    for ratio in sorted(ratios):
        bar = "#" * min(60, ratios[ratio])
        print(f"  {str(ratio):>5}: {ratios[ratio]:>4} {bar}")
    if worst[1] is not None:
        print(f"worst greedy overshoot: {worst[0]} on {worst[1]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
