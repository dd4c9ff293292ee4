"""Command line entry point: ``unram-cert <command> ...``."""

import argparse
import json
import sys
from pathlib import Path

import mpmath

from .. import tomlcompat
from ..bounds import LocalPrimeData, bound_entry, f_series, grh_rd_lower_bound, root_discriminant
from ..config import CLOSURE_CAP, M_MAX
from ..errors import UnramCertError
from ..finitefield import IntPolynomial, factor_mod_p, format_factorization, int_poly_discriminant
from ..matgroup import centralizer, group_closure
from ..quadclass import class_group
from . import SHIPPED, shipped_certificate
from .engine import COLLECT_ALL, FAIL_FAST, PASS, check_certificate
from .kinds import _matrices
from .schema import COERCE, load_certificate, parse_int_expr, parse_poly, parse_real


def _poly(text):
    # "x^2+1" or a JSON coefficient list, constant term first
    text = text.strip()
    if text.startswith("["):
        return parse_poly(json.loads(text))
    return IntPolynomial.parse(text)


def _load_matrix_file(path):
    """A TOML file with q, optional modulus and blowup, and either
    generators (row-major matrices) or singer = [n, q, m]."""
    doc = tomlcompat.loads(Path(path).read_text())
    types = {"q": "int", "modulus": "ints", "generators": "matrices", "blowup": "bool",
             "singer": "ints", "companion": "poly"}
    unknown = set(doc) - set(types)
    if unknown:
        raise ValueError(f"unknown keys in matrix file: {', '.join(sorted(unknown))}")
    return _matrices({k: COERCE[types[k]](v) for k, v in doc.items()})


def cmd_check(args):
    if args.cert in SHIPPED and not Path(args.cert).exists():
        cert = shipped_certificate(args.cert)
    else:
        cert = load_certificate(Path(args.cert))
    report = check_certificate(cert, COLLECT_ALL if args.collect_all else FAIL_FAST)
    if args.json_report:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text(timings=args.timings))
    return 0 if report.verdict == PASS else 1


def cmd_factor_mod(args):
    print(format_factorization(factor_mod_p(_poly(args.poly), args.p)))
    return 0


def cmd_disc(args):
    print(int_poly_discriminant(_poly(args.poly)))
    return 0


def cmd_classgroup(args):
    cg = class_group(args.D)
    line = f"Cl({args.D}) = {cg.invariants}  h = {cg.class_number}"
    if args.D > 0:
        line += f"  narrow = {cg.narrow}  N(eps) = {cg.unit_norm}"
    print(line)
    return 0


def cmd_rd(args):
    print(mpmath.nstr(root_discriminant(parse_int_expr(args.disc), args.degree), 15))
    return 0


def cmd_fbound(args):
    local = LocalPrimeData(((args.norm, args.count),))
    print(mpmath.nstr(f_series(local, parse_real(args.b), args.mmax), 15))
    return 0


def cmd_grhbound(args):
    entry = bound_entry(parse_real(args.b))
    print(mpmath.nstr(grh_rd_lower_bound(args.n, args.r1, args.r2, entry, parse_real(args.f)), 15))
    return 0


def cmd_centralizer(args):
    r = centralizer(_load_matrix_file(args.matrix_file))
    print(f"unit_count = {r.unit_count}  cyclic = {str(r.is_cyclic).lower()}  method = {r.method}")
    return 0


def cmd_closure(args):
    els, _ = group_closure(_load_matrix_file(args.matrix_file), args.cap)
    print(len(els))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="unram-cert",
                                 description="Replay certificates and run the underlying computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="replay a certificate file (or a shipped name: q22268, qm1567)")
    p.add_argument("cert")
    p.add_argument("--collect-all", action="store_true", help="run every step instead of stopping at the first failure")
    p.add_argument("--json-report", action="store_true", help="print the JSON report")
    p.add_argument("--timings", action="store_true", help="show per-step times in the text report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("factor-mod", help="factor an integer polynomial mod p")
    p.add_argument("poly")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_factor_mod)

    p = sub.add_parser("disc", help="discriminant of an integer polynomial")
    p.add_argument("poly")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("classgroup", help="class group of a quadratic field")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("rd", help="root discriminant |d|^(1/n)")
    p.add_argument("disc")
    p.add_argument("degree", type=int)
    p.set_defaults(func=cmd_rd)

    p = sub.add_parser("fbound", help="truncated local sum for count primes of one norm")
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--b", type=str, required=True)
    p.add_argument("--mmax", type=int, default=M_MAX)
    p.set_defaults(func=cmd_fbound)

    p = sub.add_parser("grhbound", help="GRH root discriminant lower bound")
    for name in ("n", "r1", "r2"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--b", type=str, required=True)
    p.add_argument("--f", type=str, default="0")
    p.set_defaults(func=cmd_grhbound)

    p = sub.add_parser("centralizer", help="centralizer of the matrices in a TOML file")
    p.add_argument("matrix_file")
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("closure", help="order of the group generated by the matrices in a TOML file")
    p.add_argument("matrix_file")
    p.add_argument("--cap", type=int, default=CLOSURE_CAP)
    p.set_defaults(func=cmd_closure)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnramCertError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
