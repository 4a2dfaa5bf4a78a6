"""Census of conjectural moduli components over a parameter sweep.

Prints one line per (gbar, delta, D) cell at fixed rank: component count
per kind plus the largest dimension seen.  Useful for eyeballing how the
component structure shifts across the delta = 2*gbar - 2 boundary.
"""

import argparse
from collections import Counter

from ribbonmod.core import RibbonParams
from ribbonmod.moduli import enumerate_components


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, default=4)
    ap.add_argument("--gbar", type=int, nargs=2, default=(2, 4), metavar=("LO", "HI"))
    ap.add_argument("--delta", type=int, nargs=2, default=(1, 8), metavar=("LO", "HI"))
    ap.add_argument("--degree", type=int, nargs=2, default=(0, 0), metavar=("LO", "HI"))
    ap.add_argument("--include-vb-locus", action="store_true",
                    help="also count the index-zero vector bundle locus")
    args = ap.parse_args()

    print(f"{'gbar':>4} {'delta':>5} {'D':>4} {'total':>5} {'maxdim':>6}  kinds")
    for gbar in range(args.gbar[0], args.gbar[1] + 1):
        for delta in range(args.delta[0], args.delta[1] + 1):
            p = RibbonParams(gbar=gbar, delta=delta)
            for D in range(args.degree[0], args.degree[1] + 1):
                comps = enumerate_components(
                    p, args.rank, D,
                    include_index_zero_bundles=args.include_vb_locus,
                )
                kinds = Counter(c.kind.value for c in comps)
                shape = " ".join(f"{k}={n}" for k, n in sorted(kinds.items()))
                maxdim = max((c.dimension for c in comps), default="-")
                print(f"{gbar:>4} {delta:>5} {D:>4} {len(comps):>5} "
                      f"{maxdim:>6}  {shape}")


if __name__ == "__main__":
    main()
