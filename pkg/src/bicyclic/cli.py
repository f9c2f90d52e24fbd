"""Command-line front end.

Every subcommand produces a :class:`~bicyclic.report.CertReport`; exit status
is 0 when it passes, 1 when it fails (or is an infinite outcome) and 2 on
usage or config errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import compact, discreteness, families, topology
from .core import Box, Domain, DomainError, Elem, anti_iso, down_set, inverse, mul, mul_oracle, nat_leq, up_set
from .families import Family, IndexSet, parse_family
from .report import CertReport, Status

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_pair(text: str) -> tuple[int, int]:
    try:
        i, j = text.strip().strip("()").split(",")
        return int(i), int(j)
    except ValueError:
        raise UsageError(f"expected I,J but got {text!r}") from None


def parse_domain(text: str) -> Domain:
    return {"bomega": Domain.BOMEGA, "cz": Domain.CZ}[text.lower()]


def load_family(text: str) -> Family:
    """``kind[:k][:preset]``, an inline JSON document, or ``@path`` to one."""
    try:
        if text.startswith("@"):
            return parse_family(json.loads(Path(text[1:]).read_text()))
        if text.lstrip().startswith("{"):
            return parse_family(json.loads(text))
        return parse_family(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad family {text!r}: {exc}") from None


def load_index_set(text: str) -> IndexSet:
    if text in families.PRESETS:
        return families.PRESETS[text]()
    try:
        return IndexSet.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad index set {text!r}: {exc}") from None


def prime(text: str) -> int:
    p = int(text)
    if not topology.is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} must be >= 0")
    return v


def window(text: str) -> Box:
    try:
        return Box.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _value(check: str, result, **params) -> CertReport:
    return CertReport(check, Status.PASS, [], params, {"result": result})


def _predicate(check: str, ok: bool, witness, **params) -> CertReport:
    return CertReport(check, Status.PASS if ok else Status.FAIL, [] if ok else [witness], params, {"result": ok})


# -- handlers -----------------------------------------------------------------


def cmd_mul(a):
    dom = parse_domain(a.domain)
    x, y = Elem(*parse_pair(a.x), dom), Elem(*parse_pair(a.y), dom)
    result = mul_oracle(x, y) if a.oracle else mul(x, y)
    return _value("mul", result, x=x, y=y, oracle=a.oracle)


def cmd_inverse(a):
    x = Elem(*parse_pair(a.x), parse_domain(a.domain))
    return _value("inverse", inverse(x), x=x)


def cmd_anti(a):
    x = Elem(*parse_pair(a.x), parse_domain(a.domain))
    return _value("anti_iso", anti_iso(x), x=x)


def cmd_order(a):
    dom = parse_domain(a.domain)
    x, y = Elem(*parse_pair(a.x), dom), Elem(*parse_pair(a.y), dom)
    return _predicate("order", nat_leq(x, y), [x, y], x=x, y=y)


def cmd_upset(a):
    x = Elem(*parse_pair(a.x), parse_domain(a.domain))
    fn = down_set if a.down else up_set
    return _value("downset" if a.down else "upset", fn(x, a.window), x=x, window=a.window)


def _fam_elem(F: Family, text: str) -> Elem:
    return Elem(*parse_pair(text), F.domain)


def cmd_family_contains(a):
    F = load_family(a.family)
    x = _fam_elem(F, a.x)
    return _predicate("family.contains", F.contains(x), x, family=F, x=x)


def cmd_family_enumerate(a):
    F = load_family(a.family)
    return _value("family.enumerate", families.enumerate_window(F, a.window), family=F, window=a.window)


def cmd_family_closure(a):
    return families.check_closure(load_family(a.family), a.window)


def cmd_family_solcount(a):
    F = load_family(a.family)
    e, target = _fam_elem(F, a.e), _fam_elem(F, a.target)
    sols = families.solution_count(F, e, target, a.bound)
    return _value("family.solcount", sols, family=F, e=e, target=target)


def cmd_family_classify(a):
    X, Y = load_index_set(a.X), load_index_set(a.Y)
    for spec in a.y_set or []:
        i, _, v = spec.partition("=")
        Y = Y.with_value(int(i), int(v))
    verdict = families.iso_classify(X, Y, a.depth)
    return CertReport("family.classify", Status.PASS, [], {"X": X, "Y": Y, "depth": a.depth}, {"result": verdict, "verdict": str(verdict)})


def cmd_topo_translate(a):
    dom = parse_domain(a.domain)
    s, x = Elem(*parse_pair(a.s), dom), Elem(*parse_pair(a.x), dom)
    U = topology.BasicNbhd(x, a.p, a.n, topology.Side.R)
    return _value("topo.translate", topology.left_translate_nbhd(s, U), s=s, U=U)


def cmd_topo_right(a):
    dom = parse_domain(a.domain)
    s, x = Elem(*parse_pair(a.s), dom), Elem(*parse_pair(a.x), dom)
    v = topology.right_continuity_check(s, x, a.p, a.n, a.side)
    wit = {"k": v.witness_k, "escaped": v.escaped}
    return CertReport("topo.right", Status.PASS if v.continuous else Status.FAIL, [] if v.continuous else [wit],
                      {"s": s, "x": x, "p": a.p, "n": a.n, "side": a.side}, {"result": v})


def cmd_topo_left_witness(a):
    dom = parse_domain(a.domain)
    x, y = Elem(*parse_pair(a.x), dom), Elem(*parse_pair(a.y), dom)
    v = topology.left_discontinuity_witness(x, y, a.p, a.n, a.m, a.side)
    # finding the witness is the successful outcome
    return _value("topo.left-witness", v, x=x, y=y, p=a.p, n=a.n, m=a.m, side=a.side)


def cmd_topo_bp(a):
    return topology.bp_axioms_check(parse_domain(a.domain), a.p, a.side, a.window, a.n_max)


def cmd_topo_induced(a):
    F = load_family(a.family)
    return topology.induced_nbhd_check(F, _fam_elem(F, a.x), a.p, a.n, a.side, a.samples)


def cmd_topo_ex37(a):
    return topology.ex37_check(a.p, a.n_max, a.window, a.kl_max)


def cmd_discrete_certify(a):
    return discreteness.certify_report(load_family(a.family), a.window)


def cmd_discrete_complement(a):
    F = load_family(a.family)
    e = _fam_elem(F, a.e)
    comp = discreteness.complement(F, e, a.sample)
    status = Status.PASS if comp.finite else Status.INFINITE
    return CertReport("discrete.complement", status, [], {"family": F, "e": e}, {"result": comp})


def cmd_discrete_upset(a):
    F = load_family(a.family)
    i, j = parse_pair(a.x)
    return discreteness.upset_equation_check(F, a.n, i, j, a.window)


def cmd_compact_mul(a):
    x, y = compact.parse_compact(a.x), compact.parse_compact(a.y)
    return _value("compact.mul", compact.mul_compact(x, y), x=x, y=y)


def cmd_compact_nbhd(a):
    center = compact.parse_compact(a.center)
    N = compact.nbhd_compact(center, a.p)
    return _value("compact.nbhd", list(compact.nbhd_take(N, a.count)), nbhd=N)


def cmd_compact_prop43(a):
    names = compact.PROP43_CASES[a.case][1]
    params = {k: getattr(a, k) for k in names if getattr(a, k) is not None}
    missing = [k for k in names if k not in params]
    if missing:
        raise UsageError(f"case {a.case} needs --{' --'.join(missing)}")
    return compact.prop43_check(a.case, params, a.sample_size)


def cmd_compact_ideal(a):
    return compact.ideal_check(a.bound)


def cmd_compact_quotient(a):
    if a.x is None:
        return compact.quotient_check(a.bound)
    x = compact.parse_compact(a.x)
    return _value("compact.quotient", compact.rees_quotient(x), x=x)


def cmd_compact_density(a):
    return compact.density_check(a.p_max)


def cmd_run(a):
    doc = json.loads(Path(a.config).read_text())
    return run(config_to_argv(doc))


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--timing", action="store_true", help="include elapsed time in the report")

    parser = argparse.ArgumentParser(prog="bicyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name, fn, help=None):
        p = parent.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    def group(name, help):
        g = sub.add_parser(name, help=help)
        return g.add_subparsers(dest="subcommand", required=True)

    def dom(p, default="cz"):
        p.add_argument("--domain", choices=["bomega", "cz"], default=default)

    p = leaf(sub, "mul", cmd_mul, "multiply two elements")
    dom(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p.add_argument("--oracle", action="store_true", help="use word rewriting (bomega only)")
    p = leaf(sub, "inverse", cmd_inverse, "inverse element")
    dom(p)
    p.add_argument("-x", required=True)
    p = leaf(sub, "anti", cmd_anti, "anti-isomorphism (i,j) -> (j,i)")
    dom(p)
    p.add_argument("-x", required=True)
    p = leaf(sub, "order", cmd_order, "natural partial order x <= y")
    dom(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p = leaf(sub, "upset", cmd_upset, "up-set (or --down) of x in a window")
    dom(p)
    p.add_argument("-x", required=True)
    p.add_argument("--window", type=window, default=Box.square(-5, 5))
    p.add_argument("--down", action="store_true")

    fam = group("family", "subsemigroup families")
    p = leaf(fam, "contains", cmd_family_contains)
    p.add_argument("--family", required=True)
    p.add_argument("-x", required=True)
    p = leaf(fam, "enumerate", cmd_family_enumerate)
    p.add_argument("--family", required=True)
    p.add_argument("--window", type=window, default=Box.square(0, 6))
    p = leaf(fam, "closure", cmd_family_closure)
    p.add_argument("--family", required=True)
    p.add_argument("--window", type=window, default=Box.square(-6, 6))
    p = leaf(fam, "solcount", cmd_family_solcount)
    p.add_argument("--family", required=True)
    p.add_argument("-e", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--bound", type=window, default=None)
    p = leaf(fam, "classify", cmd_family_classify)
    p.add_argument("--X", required=True, help="preset name or index-set JSON")
    p.add_argument("--Y", required=True)
    p.add_argument("--y-set", action="append", metavar="I=V", help="override y_I with V")
    p.add_argument("--depth", type=nonneg, default=100)

    topo = group("topo", "progression topologies")
    p = leaf(topo, "translate", cmd_topo_translate)
    dom(p)
    p.add_argument("-s", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--n", type=nonneg, default=1)
    p = leaf(topo, "right", cmd_topo_right)
    dom(p)
    p.add_argument("-s", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--n", type=nonneg, default=1)
    p.add_argument("--side", choices=["r", "l"], default="r")
    p = leaf(topo, "left-witness", cmd_topo_left_witness)
    dom(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--n", type=nonneg, default=1)
    p.add_argument("--m", type=nonneg, default=1)
    p.add_argument("--side", choices=["r", "l"], default="r")
    p = leaf(topo, "bp", cmd_topo_bp)
    dom(p, "bomega")
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--side", choices=["r", "l"], default="r")
    p.add_argument("--window", type=window, default=Box.square(0, 8))
    p.add_argument("--n-max", type=nonneg, default=3)
    p = leaf(topo, "induced", cmd_topo_induced)
    p.add_argument("--family", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--n", type=nonneg, default=0)
    p.add_argument("--side", choices=["r", "l"], default=None)
    p.add_argument("--samples", type=nonneg, default=200)
    p = leaf(topo, "ex37", cmd_topo_ex37)
    p.add_argument("--p", type=prime, default=2)
    p.add_argument("--n-max", type=nonneg, default=3)
    p.add_argument("--window", type=window, default=Box.square(-8, 8))
    p.add_argument("--kl-max", type=nonneg, default=8)

    disc = group("discrete", "discreteness certificates")
    p = leaf(disc, "certify", cmd_discrete_certify)
    p.add_argument("--family", required=True)
    p.add_argument("--window", type=window, default=Box.square(0, 6))
    p = leaf(disc, "complement", cmd_discrete_complement)
    p.add_argument("--family", required=True)
    p.add_argument("-e", required=True, help="idempotent Q,Q")
    p.add_argument("--sample", type=window, default=None)
    p = leaf(disc, "upset", cmd_discrete_upset)
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-x", required=True)
    p.add_argument("--window", type=window, default=Box.square(-6, 6))

    comp = group("compact", "the compact semigroup S+_O")
    p = leaf(comp, "mul", cmd_compact_mul)
    p.add_argument("-x", required=True, help="g1:N | c:I,J | g0:M | zero")
    p.add_argument("-y", required=True)
    p = leaf(comp, "nbhd", cmd_compact_nbhd)
    p.add_argument("--center", required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--count", type=nonneg, default=10)
    p = leaf(comp, "prop43", cmd_compact_prop43)
    p.add_argument("--case", type=int, choices=range(1, 8), required=True)
    for name in ("n", "m", "i", "j", "p", "p1", "p2"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--sample-size", type=nonneg, default=100)
    p = leaf(comp, "ideal", cmd_compact_ideal)
    p.add_argument("--bound", type=nonneg, default=4)
    p = leaf(comp, "quotient", cmd_compact_quotient)
    p.add_argument("-x", default=None)
    p.add_argument("--bound", type=nonneg, default=3)
    p = leaf(comp, "density", cmd_compact_density)
    p.add_argument("--p-max", type=int, default=50)

    p = leaf(sub, "run", cmd_run, "run a JSON config document")
    p.add_argument("config")
    return parser


_NEGATIVE = re.compile(r"-\d[\d,.\-]*")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``-x -1,3`` into ``-x=-1,3`` so argparse does not read ``-1,3`` as a flag."""
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE.fullmatch(tok) and out[-1].startswith("-") and "=" not in out[-1] and not _NEGATIVE.fullmatch(out[-1]):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def config_to_argv(doc: dict) -> list[str]:
    """Map a run-config document onto command-line arguments.

    ``command`` is the subcommand path (``"discrete certify"``); remaining
    keys become ``--key value`` flags, with ``family`` dumped as JSON.
    """
    if "command" not in doc:
        raise UsageError("config needs a 'command'")
    argv = str(doc["command"]).split()
    short = {"x", "y", "e", "s"}
    for key, value in doc.items():
        if key == "command":
            continue
        flag = ("-" if key in short else "--") + key.replace("_", "-")
        if key == "output_format":
            flag = "--format"
        if isinstance(value, bool):
            if value:
                argv.append(flag)
            continue
        if isinstance(value, (dict, list)) and key == "family":
            value = json.dumps(value)
        elif isinstance(value, list):
            value = ",".join(map(str, value))
        argv.append(f"{flag}={value}")
    return argv


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    start = time.perf_counter()
    try:
        report = args.fn(args)
        if isinstance(report, int):
            return report
    except (UsageError, DomainError, ValueError, KeyError, IndexError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed = time.perf_counter() - start
    if args.format == "json":
        print(report.dumps(timing=args.timing), file=out)
    else:
        print(report.text(), file=out)
        if "result" in report.details:
            print(f"result: {_render(report.details['result'])}", file=out)
        if "verdict" in report.details:
            print(f"verdict: {report.details['verdict']}", file=out)
        if args.timing:
            print(f"elapsed: {report.elapsed:.3f}s", file=out)
    return EXIT_PASS if report.status is Status.PASS else EXIT_FAIL


def _render(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    if isinstance(value, families.Solutions):
        return f"count={value.count} " + _render(list(value.solutions))
    if isinstance(value, discreteness.Complement):
        kind = "finite" if value.finite else "infinite (window sample)"
        return f"{kind} " + _render(list(value.elements))
    if isinstance(value, topology.ContinuityVerdict):
        if value.continuous:
            return f"continuous, m={value.m}"
        return f"discontinuous, k={value.witness_k}, escaped={value.escaped}"
    return str(value)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
