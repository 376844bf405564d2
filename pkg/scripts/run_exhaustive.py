#!/usr/bin/env python3
"""Exhaustively compare the decision procedure with the brute-force oracle
over small finite fields and print a verdict census.

Example:
    python3 scripts/run_exhaustive.py --sets 2,3 3,3 2,5
"""

import argparse
import time

from isodet import GF, decide
from isodet.oracle import BulkOracle


def run_set(n: int, p: int) -> None:
    f = GF(p)
    total = p ** (n * n)
    t0 = time.time()
    bulk = BulkOracle(n, p)
    members = 0
    disagreements = 0
    method_census: dict[str, int] = {}
    for idx in range(total):
        M = bulk.matrix_from_index(idx, f)
        rep = decide(M)
        if rep.all_det_one:
            members += 1
        method_census[rep.method.value] = method_census.get(rep.method.value, 0) + 1
        if rep.all_det_one != bulk.verdict(M):
            disagreements += 1
            print(f"  DISAGREEMENT at index {idx}: {M.to_lists()}")
    dt = time.time() - t0
    print(f"M_{n}(F_{p}): {total} matrices, {members} members, "
          f"{disagreements} disagreements, methods {method_census}, {dt:.1f}s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sets", nargs="*", default=["2,3", "3,3", "2,5"],
                    metavar="N,P", help="matrix size and field characteristic")
    args = ap.parse_args()
    for spec in args.sets:
        n, p = (int(x) for x in spec.split(","))
        run_set(n, p)


if __name__ == "__main__":
    main()
