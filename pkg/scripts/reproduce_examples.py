"""Walk through the three named instance families and print their numbers.

Run from the repo root after an editable install:

    python scripts/reproduce_examples.py
"""

import argparse

from dollargame import (
    borrowing_binge,
    hybrid_example,
    intro_example,
    star_example,
    verify_bound,
)


def show_intro() -> None:
    inst = intro_example()
    g, c = inst.graph, inst.divisor
    print("== intro instance ==")
    print(f"divisor: {list(c)}")
    trace = borrowing_binge(g, c)
    seq = ", ".join(f"{m.kind.value}@{m.vertex}" for m in trace.moves)
    print(f"greedy: {trace.move_count} moves ({seq}) -> {list(trace.final)}")
    report = verify_bound(g, c)
    moves = ", ".join(f"{m.kind.value}@{m.vertex}" for m in report.witness_moves)
    frac = report.bound_rational
    print(f"optimal: {report.m_min} move(s) ({moves})")
    print(f"bound m0/(n-1) = {frac.numerator}/{frac.denominator}, "
          f"holds={report.holds}, tight={report.tight}")
    print()


def sweep(label: str, cases, side: str) -> None:
    print(f"== {label} ==")
    print(f"{'n':>3} {'k':>3} {'m0':>5} {'m_min':>5} {'bound':>8} {'ratio':>7} tight")
    for n, k, inst in cases:
        report = verify_bound(inst.graph, inst.divisor, side=side)
        frac = report.bound_rational
        ratio = report.m0 / report.m_min
        print(f"{n:>3} {k:>3} {report.m0:>5} {report.m_min:>5} "
              f"{str(frac):>8} {ratio:>7.2f} {report.tight}")
    print()


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8,
                    help="largest family size to sweep (default 8)")
    args = ap.parse_args()

    show_intro()
    stars = [(n, k, star_example(n, k))
             for n in range(3, args.max_n + 1) for k in (1, 2, 3)]
    sweep("star family (greedy off by n-1 exactly)", stars, "chip")
    hybrids = [(n, k, hybrid_example(n, k))
               for n in range(4, args.max_n + 1, 2) for k in (1, 2)]
    sweep("hub-and-pendant family (greedy off by n/2)", hybrids, "chip")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
