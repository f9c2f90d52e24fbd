"""Solution-count profiles that separate the cpluskx(1, X) isomorphism types."""

import argparse

from bicyclic.families import PRESETS, cplus_kx, iso_classify, solution_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=8)
    args = ap.parse_args()
    names = sorted(PRESETS)
    for name in names:
        print(f"{name:10s} {solution_profile(cplus_kx(1, PRESETS[name]()), args.depth)}")
    print()
    for a in names:
        for b in names:
            if a < b:
                depth = min(args.depth, 16)
                print(f"{a} vs {b}: {iso_classify(PRESETS[a](), PRESETS[b](), depth)}")


if __name__ == "__main__":
    main()
