#!/usr/bin/env python3
"""Survey how often random binary texts admit an overlapping cover of net
occurrences, by length. Purely exploratory; not part of the test suite."""

import argparse
import random
import sys

from netoccs.netfreq import net_occurrences_bruteforce
from netoccs.onoc import greedy_onoc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=500, help="texts per length")
    parser.add_argument("--min-len", type=int, default=4)
    parser.add_argument("--max-len", type=int, default=24)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print("len  covered  mean_members  mean_net_occs")
    for length in range(args.min_len, args.max_len + 1):
        covered = 0
        member_total = 0
        occ_total = 0
        for _ in range(args.samples):
            text = "".join(rng.choice("ab") for _ in range(length))
            occs = [r.occurrence for r in net_occurrences_bruteforce(text)]
            occ_total += len(occs)
            cover = greedy_onoc(text, occs)
            if cover is not None:
                covered += 1
                member_total += len(cover)
        frac = covered / args.samples
        mean_members = member_total / covered if covered else 0.0
        print(
            f"{length:3d}  {frac:7.3f}  {mean_members:12.2f}  "
            f"{occ_total / args.samples:13.2f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
