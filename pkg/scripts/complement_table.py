"""Tabulate isolating idempotents and complement sizes per family member."""

import argparse

from bicyclic.core import Box
from bicyclic.discreteness import certify
from bicyclic.families import parse_family


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("families", nargs="*", default=["cplus", "cpluskx:1:evens", "cpluskx:2:odds", "czplusshift:-2", "czpluskx:1:evens"])
    ap.add_argument("--window", default="0..6")
    args = ap.parse_args()
    window = Box.parse(args.window)
    for text in args.families:
        F = parse_family(text)
        w = window if F.floor is None or window.lo1 >= F.floor else Box(F.floor, window.hi1, F.floor, window.hi2)
        print(f"# {F}  window {w}")
        print(f"{'element':>10} {'idempotent':>10} {'finite':>7} {'size':>5}")
        for c in certify(F, w):
            size = len(c.complement) if c.finite else "-"
            print(f"{str(c.element):>10} {str(c.idempotent):>10} {str(c.finite):>7} {size:>5}")
        print()


if __name__ == "__main__":
    main()
