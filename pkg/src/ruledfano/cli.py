"""Command-line front end: ``ruledfano <command> ...`` (or ``python -m ruledfano``).

Exit codes: 0 success (all ledger entries pass), 1 a ledger entry failed,
2 usage, parse or input error.
"""

import argparse
import sys

from . import chern, instanton, ledger
from .chow import format_rational, make_model
from .errors import RuledFanoError
from .expr import parse_expression
from .p2 import sym_power_cohomology
from .xcoh import line_cohomology_x


def _table(t):
    return str(t) if t.exact else f"{t}  (bounds only)"


def _print_fields(d):
    for k, v in d.items():
        if isinstance(v, list):
            v = "; ".join(v) if v else "-"
        elif isinstance(v, bool):
            v = "yes" if v else "no"
        elif v is None:
            v = "unknown"
        print(f"{k}: {v}")


def cmd_chow_eval(args):
    m = make_model(args.c)
    e = parse_expression(args.expr, m)
    print(e)
    print(f"degree: {format_rational(e.degree())}")
    return 0


def cmd_chi(args):
    m = make_model(args.c)
    s = chern.SheafClass(m, args.rank, parse_expression(args.c1, m),
                         parse_expression(args.c2, m), parse_expression(args.c3, m))
    if args.twist:
        s = chern.twist(s, parse_expression(args.twist, m))
    print(chern.euler_characteristic(s))
    return 0


def cmd_coh_line(args):
    print(_table(line_cohomology_x(args.c, args.l1, args.l2)))
    return 0


def cmd_coh_sym(args):
    print(_table(sym_power_cohomology(args.c, args.m, args.b)))
    return 0


def cmd_invariants(args):
    _print_fields(instanton.instanton_invariants(args.alpha, args.beta, args.c).as_dict())
    return 0


def cmd_serre(args):
    e = instanton.serre_family(instanton.SerreFamilyParams(args.m, args.c))
    _print_fields(e.as_dict())
    return 0


def cmd_pullback(args):
    e = instanton.pullback_family(instanton.PullbackFamilyParams(args.l, args.c))
    _print_fields(e.as_dict())
    return 0


def cmd_transform(args):
    if args.times < 0:
        raise RuledFanoError("--times must be non-negative")
    if args.beta == 2 and args.alpha >= 5:
        # the Serre family realizes beta = 2, so the Ext dimensions are known
        e = instanton.serre_family(instanton.SerreFamilyParams(args.alpha - 4, args.c))
    else:
        e = instanton.instanton_invariants(args.alpha, args.beta, args.c)
    _print_fields(instanton.transform_along_lines(e, args.times).as_dict())
    return 0


def cmd_hoppe(args):
    r = instanton.hoppe_region(args.c, (args.amin, args.amax), (args.bmin, args.bmax))
    p, q = r.pairing
    print(f"mu: {r.mu}")
    print(f"pairing: {p}*a + {q}*b <= {-r.mu}")
    print(f"points: {len(r.points)}")
    for a, b in r.points:
        print(f"{a} {b}")
    return 0


def cmd_verify(args):
    report = ledger.run_ledger(args.ledger, parallel=not args.serial)
    sys.stdout.write(ledger.emit_report(report, "json" if args.json else "text").decode())
    return 1 if report.failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="ruledfano",
                                description="Exact intersection theory and instanton invariants on X_c.")
    sub = p.add_subparsers(dest="command", required=True)

    chow = sub.add_parser("chow", help="Chow ring arithmetic")
    chow_sub = chow.add_subparsers(dest="action", required=True)
    ev = chow_sub.add_parser("eval", help="normal form and degree of an expression")
    ev.add_argument("--c", type=int, required=True)
    ev.add_argument("expr")
    ev.set_defaults(func=cmd_chow_eval)

    chi = sub.add_parser("chi", help="Euler characteristic by Riemann-Roch")
    chi.add_argument("--c", type=int, required=True)
    chi.add_argument("--rank", type=int, required=True)
    chi.add_argument("--c1", required=True)
    chi.add_argument("--c2", required=True)
    chi.add_argument("--c3", default="0")
    chi.add_argument("--twist", default=None, help="divisor to twist by")
    chi.set_defaults(func=cmd_chi)

    coh = sub.add_parser("coh", help="cohomology tables")
    coh_sub = coh.add_subparsers(dest="action", required=True)
    line = coh_sub.add_parser("line", help="h^i(O(l1 xi + l2 f)) on X_c")
    line.add_argument("--c", type=int, required=True)
    line.add_argument("--l1", type=int, required=True)
    line.add_argument("--l2", type=int, required=True)
    line.set_defaults(func=cmd_coh_line)
    sym = coh_sub.add_parser("sym", help="h^i(S^m F_c (b)) on the plane")
    sym.add_argument("--c", type=int, required=True)
    sym.add_argument("-m", type=int, required=True)
    sym.add_argument("-b", type=int, required=True)
    sym.set_defaults(func=cmd_coh_sym)

    inst = sub.add_parser("instanton", help="instanton invariants and families")
    inst_sub = inst.add_subparsers(dest="action", required=True)
    inv = inst_sub.add_parser("invariants")
    inv.add_argument("--c", type=int, required=True)
    inv.add_argument("--alpha", type=int, required=True)
    inv.add_argument("--beta", type=int, required=True)
    inv.set_defaults(func=cmd_invariants)
    serre = inst_sub.add_parser("serre", help="family from m disjoint curves of class xi f")
    serre.add_argument("--c", type=int, required=True)
    serre.add_argument("-m", type=int, required=True)
    serre.set_defaults(func=cmd_serre)
    pb = inst_sub.add_parser("pullback", help="pullback family with parameter l")
    pb.add_argument("--c", type=int, required=True)
    pb.add_argument("-l", type=int, required=True)
    pb.set_defaults(func=cmd_pullback)
    tr = inst_sub.add_parser("transform", help="elementary transforms along lines")
    tr.add_argument("--c", type=int, required=True)
    tr.add_argument("--alpha", type=int, required=True)
    tr.add_argument("--beta", type=int, required=True)
    tr.add_argument("--times", type=int, default=1)
    tr.set_defaults(func=cmd_transform)
    hp = inst_sub.add_parser("hoppe", help="integer points of the Hoppe region")
    hp.add_argument("--c", type=int, required=True)
    for name in ("amin", "amax", "bmin", "bmax"):
        hp.add_argument(f"--{name}", type=int, required=True)
    hp.set_defaults(func=cmd_hoppe)

    ver = sub.add_parser("verify", help="run the verification ledger")
    ver.add_argument("--ledger", default=None, help="ledger file (default: bundled)")
    ver.add_argument("--json", action="store_true", help="emit the JSON report")
    ver.add_argument("--serial", action="store_true", help="evaluate entries one at a time")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RuledFanoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
