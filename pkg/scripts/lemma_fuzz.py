"""Long-running randomized check of the two comparison lemmas.

Runs far more samples than the test suite bothers with.  Exits nonzero
and prints every counterexample if either lemma ever fails, which would
mean a bug in the checker rather than in the lemmas.
"""

import argparse
import sys
import time

from ribbonmod.stability import verify_slope_lemma, verify_weight_lemma


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    failed = False
    for name, verify in (("slope", verify_slope_lemma),
                         ("weight", verify_weight_lemma)):
        t0 = time.perf_counter()
        outcome = verify(args.samples, seed=args.seed)
        dt = time.perf_counter() - t0
        print(f"{name}: {outcome.checked} checked, "
              f"{outcome.strict_checked} strict, "
              f"{len(outcome.counterexamples)} counterexamples, {dt:.1f}s")
        for line in outcome.counterexamples:
            print(f"  {line}")
        failed = failed or not outcome.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
