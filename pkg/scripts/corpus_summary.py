#!/usr/bin/env python3
"""Distribution of exact cop numbers over all connected labeled graphs with
up to --max-n vertices: how often one cop suffices, how often the chase
needs the full domination number, and where the one-cop witnesses split
between bad blocks and hallways.
"""

import argparse
from collections import Counter

from fastrobber.copwin import decide_one_cop
from fastrobber.generators import enumerate_connected
from fastrobber.verify import c1_exact, cinf_exact, gamma_exact


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        cinf_hist = Counter()
        gap_c1 = Counter()  # c_inf - c_1
        slack_gamma = Counter()  # gamma - c_inf
        witness = Counter()
        total = 0
        for g in enumerate_connected(n):
            total += 1
            cinf = cinf_exact(g)
            cinf_hist[cinf] += 1
            gap_c1[cinf - c1_exact(g)] += 1
            slack_gamma[gamma_exact(g) - cinf] += 1
            verdict = decide_one_cop(g)
            if verdict.is_copwin:
                witness["copwin"] += 1
            elif verdict.bad_block is not None:
                witness["bad block"] += 1
            else:
                witness["hallway"] += 1
        print(f"n={n}  ({total} graphs)")
        print(f"  c_inf histogram: {dict(sorted(cinf_hist.items()))}")
        print(f"  c_inf - c_1:     {dict(sorted(gap_c1.items()))}")
        print(f"  gamma - c_inf:   {dict(sorted(slack_gamma.items()))}")
        print(f"  one-cop verdicts: {dict(sorted(witness.items()))}")


if __name__ == "__main__":
    main()
