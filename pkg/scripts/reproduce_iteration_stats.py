#!/usr/bin/env python3
"""Reproduce the K=64 search-iteration statistics table.

Generates N truncated-geometric symbols, builds a static model from the
empirical counts, captures the decoder's code values once, and replays
every boundary-array search over them.  Prints one row per strategy:
the iteration histogram (percent of symbols per iteration count) and the
average.
"""

import argparse

from rangekit.bench import iteration_histogram
from rangekit.datagen import GenSpec, gen_sequence

REPLAY_STRATEGIES = ("lin-fwd", "lin-bwd", "log", "log2", "exp", "tree", "table")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=64)
    ap.add_argument("--n", type=int, default=10 ** 6)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    seq = gen_sequence(GenSpec("geometric", args.k, args.n, args.seed)).tolist()
    print(f"K={args.k}  N={args.n}  seed={args.seed}  (truncated geometric)\n")
    print(f"{'strategy':<8}  {'ave.':>6}  histogram (iterations: %)")
    for strat in REPLAY_STRATEGIES:
        stats = iteration_histogram(strat, seq, args.k)
        hist = "  ".join(f"{it}: {pct:.2f}" for it, pct in
                         sorted(stats.histogram.items())[:8])
        more = "  ..." if len(stats.histogram) > 8 else ""
        print(f"{strat:<8}  {stats.average:6.2f}  {hist}{more}")


if __name__ == "__main__":
    main()
