"""Run the desk-scale verification checks and write one JSON report per check.

    python3 scripts/verify_all.py --out reports/
"""

import argparse
import time
from pathlib import Path

from bicyclic import compact, families, topology
from bicyclic.core import Box, Domain
from bicyclic.discreteness import certify_report
from bicyclic.families import cplus_kx, cz_plus_kx, evens, l_tilde
from bicyclic.topology import Side


def checks(quick: bool):
    n_max = 2 if quick else 3
    yield "closure_cpluskx", lambda: families.check_closure(cplus_kx(1, evens()), Box.square(0, 10))
    yield "closure_ltilde0", lambda: families.check_closure(l_tilde(0), Box.square(-5, 5))
    yield "certify_cpluskx", lambda: certify_report(cplus_kx(1, evens()), Box.square(0, 12))
    yield "certify_czpluskx", lambda: certify_report(cz_plus_kx(1, evens()), Box.square(-6, 2))
    for side in Side:
        for p in (2, 3):
            yield f"bp_{side.value}_p{p}", lambda side=side, p=p: topology.bp_axioms_check(Domain.BOMEGA, p, side, Box.square(0, 12), n_max)
    for p in (2, 3):
        yield f"ex37_p{p}", lambda p=p: topology.ex37_check(p, n_max, Box.square(-8, 8))
    yield "compact_assoc", lambda: compact.associativity_check(3)
    yield "compact_prop43", lambda: compact.prop43_all(8 if quick else 15)
    yield "compact_ideal", lambda: compact.ideal_check(4)
    yield "compact_quotient", lambda: compact.quotient_check(3)
    yield "compact_density", lambda: compact.density_check(50)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, fn in checks(args.quick):
        start = time.perf_counter()
        rep = fn()
        (args.out / f"{name}.json").write_text(rep.dumps() + "\n")
        print(f"{rep.status.value:16s} {name:20s} {time.perf_counter() - start:6.2f}s")


if __name__ == "__main__":
    main()
