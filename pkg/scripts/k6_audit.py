"""Sample 6-regular 2-connected order-13 graphs and look for K6 minors.

    python3 scripts/k6_audit.py --count 1000 --seed 7
"""

import argparse
import time

from apexion.pipeline import k6_audit


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = k6_audit(args.count, args.seed)
    print(rep.to_text(), end="")
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
