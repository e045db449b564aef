"""Distinct-P2 counts per admissible (k, l) against the k - l + 2 bound."""
import argparse

from corona_glue.geography import admissible, component_lower_bound, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=8)
    ap.add_argument("--lmax", type=int, default=7)
    args = ap.parse_args()
    rows = sweep(args.kmax, args.lmax)
    print(f"{'k':>3} {'l':>3} {'rows':>5} {'distinct P2':>12} {'k-l+2':>6}")
    for k in range(1, args.kmax + 1):
        for l in range(1, args.lmax + 1):
            if not admissible(k, l):
                continue
            n = sum(1 for r in rows if (r.k, r.l) == (k, l))
            print(f"{k:>3} {l:>3} {n:>5} {component_lower_bound(k, l, rows):>12} {k - l + 2:>6}")


if __name__ == "__main__":
    main()
