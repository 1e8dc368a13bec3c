"""Tabulate the Khovanskii bound next to observed average incidences.

Usage: python scripts/khovanskii_table.py [--max-dim 8]
"""
import argparse

from edgesimple.generators import builtin_zoo
from edgesimple.gh import average_incidence, khovanskii_bound
from edgesimple.lattice import simplicity_class


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=8)
    args = ap.parse_args()
    print("bound(d, k, l)")
    for d in range(4, args.max_dim + 1):
        cells = [f"({k},{l})={khovanskii_bound(d, k, l)}" for l in range(2, d // 2 + 1) for k in range(1, l)]
        print(f"  d={d}: " + "  ".join(cells))
    print("\nobserved averages on the zoo")
    for p in builtin_zoo():
        d = p.dim
        if d < 4 or not simplicity_class(p).simple_in_edges:
            continue
        for l in range(2, d // 2 + 1):
            for k in range(1, l):
                avg = average_incidence(p, k, l)
                print(f"  {p.label:22s} k={k} l={l} average={avg!s:6s} bound={khovanskii_bound(d, k, l)}")


if __name__ == "__main__":
    main()
