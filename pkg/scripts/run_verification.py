#!/usr/bin/env python3
"""Run the full verification suite: both family sweeps at their default
caps plus the ONOC containment property suite, printing one summary line
per stage and exiting nonzero if anything failed."""

import argparse
import sys

from netoccs.verifier import verify_fibonacci, verify_onoc_lemma_random, verify_thue_morse


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fib-max", type=int, default=20)
    parser.add_argument("--tm-max", type=int, default=14)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--max-len", type=int, default=24)
    parser.add_argument("--exhaustive-len", type=int, default=14)
    args = parser.parse_args()

    ok = True
    for name, report in (
        ("fibonacci", verify_fibonacci(args.fib_max)),
        ("thue-morse", verify_thue_morse(args.tm_max)),
    ):
        good = sum(1 for c in report.claims.values() if c.passed)
        total = len(report.claims)
        print(f"{name}: {good}/{total} claims passed in {report.wall_time:.1f}s")
        for claim, result in report.failed().items():
            print(f"  FAIL {claim} witness={result.witness!r}")
        ok = ok and report.all_passed()

    exhaustive = verify_onoc_lemma_random(
        seed=0, samples=0, max_len=args.exhaustive_len, exhaustive=True
    )
    print(
        f"onoc exhaustive(<={args.exhaustive_len}): {exhaustive.tested()} covers, "
        f"{len(exhaustive.violations)} violations"
    )
    sampled = verify_onoc_lemma_random(args.seed, args.samples, args.max_len)
    print(
        f"onoc random(seed={args.seed}, n={args.samples}, <={args.max_len}): "
        f"{sampled.tested()} covers, {len(sampled.violations)} violations"
    )
    ok = ok and exhaustive.ok() and sampled.ok()

    print("OK" if ok else "FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
