"""Exhaustive MMNA count rows for small orders.

Seeds every order with all graphs of min degree 3 and ceil(3n/2) <= e <= 4n-10
(K6 admitted at n = 6), runs the edge-deletion cascade and prints the row.

    python3 scripts/table_rows.py 6 7 8 9
    python3 scripts/table_rows.py 10 --output runs/n10
"""

import argparse
import logging
import time
from pathlib import Path

from apexion.enumeration import enumerate_all
from apexion.graph6 import write_file
from apexion.pipeline import CascadeConfig, cascade, cascade_seed_spec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("orders", nargs="+", type=int)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--output", help="directory for mmna_n<N>.g6 files")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    for n in args.orders:
        t0 = time.perf_counter()
        seeds = list(enumerate_all(cascade_seed_spec(n)))
        t1 = time.perf_counter()
        ckpt = None
        if args.output:
            ckpt = Path(args.output) / f"ckpt_n{n}"
            ckpt.mkdir(parents=True, exist_ok=True)
        res = cascade(seeds, CascadeConfig(workers=args.workers, checkpoint_dir=str(ckpt) if ckpt else None))
        t2 = time.perf_counter()
        print(f"n={n}: {res.table.row(n)}  seeds={len(seeds)} tested={res.stats['tested']} "
              f"enumerate={t1 - t0:.1f}s cascade={t2 - t1:.1f}s")
        if args.output:
            write_file(Path(args.output) / f"mmna_n{n}.g6", res.mmna)


if __name__ == "__main__":
    main()
