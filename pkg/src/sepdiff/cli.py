"""Command-line interface: ``sepdiff <command> --field ... [options]``.

Output is a record of ``key = value`` lines.  Exit codes: 0 success,
1 precondition violation, 2 parse error, 3 search budget exhausted,
4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import errors
from .diffpoly import (DEFAULT_BUDGET, DiffRing, delta_n, degree, format_derivvar, initial,
                       leader, nonvanishing_witness, order, rank, separant)
from .parsing import parse_dpoly, parse_element, parse_element_tuple, parse_field, split_top_level
from .prolongation import AlgebraicSystem, check_membership, default_names, lift_point, prolong
from .pstructure import (adjoin_pth_root, degree_of_imperfection, differential_p_basis,
                         extend_with_constants, is_diff_p_independent, is_p_independent,
                         lambda_finite, lambda_infinite, p_monomials)
from .quotient import sdcf_witness
from .reduction import full_reduce, make_satideal, member_with_certificate, verify_certificate
from .selftest import run_selftest


class Report:
    def __init__(self):
        self.items = []
        self._keys = set()
        self.exit_code = 0

    def add(self, key, value):
        if key in self._keys:
            raise errors.InvariantBreach(f"duplicate report key {key!r}")
        self._keys.add(key)
        if isinstance(value, bool):
            value = str(value).lower()
        self.items.append((key, str(value)))

    def extend(self, lines, prefix=""):
        for line in lines:
            key, _, value = line.partition(" = ")
            self.add(prefix + key, value)

    def render(self, fmt="record"):
        if fmt == "json":
            return json.dumps(dict(self.items), indent=2) + "\n"
        return "".join(f"{k} = {v}\n" for k, v in self.items)


def _tuple_str(values):
    return "(" + ", ".join(str(v) for v in values) + ")"


def _budget():
    value = os.environ.get("SEPDIFF_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def cmd_field(args, K, report):
    eps, e = degree_of_imperfection(K)
    report.add("field", K)
    report.add("p", K.p)
    report.add("constant_gens", _tuple_str(K.constant_gens))
    report.add("has_diff_gen", K.has_diff_gen)
    report.add("m", K.m)
    report.add("epsilon", eps)
    report.add("e", e)


def cmd_dpoly(args, K, report):
    R = DiffRing(K)
    f = parse_dpoly(args.poly, R)
    report.add("poly", f)
    report.add("order", order(f))
    v = leader(f)
    r = rank(f)
    report.add("leader", format_derivvar(R, v))
    report.add("degree", degree(f))
    report.add("rank", f"({r.order},{r.degree})")
    report.add("separant", separant(f))
    report.add("initial", initial(f))
    if args.nonvanishing:
        report.add("nonvanishing_witness", nonvanishing_witness(f, _budget()))


def cmd_delta(args, K, report):
    R = DiffRing(K)
    f = parse_dpoly(args.poly, R)
    report.add("poly", f)
    report.add("times", args.times)
    report.add("delta", delta_n(f, args.times))


def _certificate_report(cert, g, f, report, prefix=""):
    report.extend(cert.to_record(), prefix)
    ok = verify_certificate(cert, g, f)
    report.add(prefix + "verified", ok)
    if not ok:
        raise errors.InvariantBreach("certificate failed verification")


def cmd_reduce(args, K, report):
    R = DiffRing(K)
    f = parse_dpoly(args.ideal, R)
    g = parse_dpoly(args.poly, R)
    report.add("f", f)
    report.add("g", g)
    _certificate_report(full_reduce(g, f), g, f, report)


def cmd_member(args, K, report):
    R = DiffRing(K)
    f = parse_dpoly(args.ideal, R)
    g = parse_dpoly(args.poly, R)
    P = make_satideal(f, assert_irreducible=args.assert_irreducible)
    is_member, cert = member_with_certificate(g, P)
    report.add("ideal.f", f)
    report.add("irreducibility", P.provenance.value)
    report.add("g", g)
    report.add("member", is_member)
    _certificate_report(cert, g, f, report, "certificate.")


def cmd_witness(args, K, report):
    R = DiffRing(K)
    f = parse_dpoly(args.f, R)
    g = parse_dpoly(args.g, R)
    witness = sdcf_witness(f, g, assert_irreducible=args.assert_irreducible)
    report.extend(witness.to_record())


def cmd_lambda(args, K, report):
    b = parse_element(args.b, K)
    if args.tuple is not None:
        A = parse_element_tuple(args.tuple, K)
        result = lambda_infinite(A, b)
        report.add("mode", "infinite")
        report.add("tuple", _tuple_str(A))
    else:
        result = lambda_finite(b)
        report.add("mode", "finite")
        report.add("basis", _tuple_str(differential_p_basis(K)))
    report.add("b", b)
    for i, m in enumerate(result.monomials):
        report.add(f"monomial[{i}]", m)
    for i, value in enumerate(result.values):
        report.add(f"lambda[{i}]", value)
    report.add("case", result.case)
    if result.case == "solved" and result.reconstruct() != b:
        raise errors.InvariantBreach("lambda reconstruction failed")


def cmd_pindep(args, K, report):
    A = parse_element_tuple(args.tuple, K)
    report.add("tuple", _tuple_str(A))
    report.add("p_monomials", _tuple_str(p_monomials(A, K)))
    report.add("p_independent", is_p_independent(A, K))
    report.add("diff_p_independent", is_diff_p_independent(A, K))


def cmd_basis(args, K, report):
    eps, e = degree_of_imperfection(K)
    report.add("field", K)
    report.add("epsilon", eps)
    report.add("e", e)
    report.add("basis", _tuple_str(differential_p_basis(K)))


def cmd_prolong(args, K, report):
    names = tuple(split_top_level(args.vars)) if args.vars else default_names(1)
    R = DiffRing(K, names)
    polys = tuple(parse_dpoly(text, R) for text in args.poly)
    tau = prolong(AlgebraicSystem(R, polys))
    report.add("vars", _tuple_str(tau.ring.names))
    for i, (f, df) in enumerate(tau.pairs):
        report.add(f"f[{i}]", f)
        report.add(f"Df[{i}]", df)
    if args.point is not None:
        a = parse_element_tuple(args.point, K)
        if len(a) != R.arity:
            raise errors.ArityMismatch(f"point has {len(a)} coordinates, expected {R.arity}")
        lifted = lift_point(a)
        report.add("lift", _tuple_str(lifted))
        report.add("on_prolongation", check_membership(lifted, tau))


def cmd_adjoin(args, K, report):
    report.add("field", K)
    report.add("epsilon_before", degree_of_imperfection(K)[0])
    if args.root:
        new, rewrite = adjoin_pth_root(K, args.root, args.root_name)
        report.add("new_field", new)
        for name, image in rewrite.images.items():
            report.add(f"rewrite[{name}]", image)
    else:
        names = tuple(split_top_level(args.constants or ""))
        new = extend_with_constants(K, names)
        report.add("new_field", new)
    report.add("epsilon_after", degree_of_imperfection(new)[0])


def cmd_selftest(args, report):
    results = run_selftest(seed=args.seed, scale=args.scale, workers=args.workers)
    failed = 0
    for name, passed, total in results:
        report.add(f"suite.{name}", f"{passed}/{total}")
        failed += total - passed
    report.add("seed", args.seed)
    report.add("status", "pass" if not failed else "fail")
    if failed:
        report.exit_code = 4


COMMANDS = {
    "field": cmd_field,
    "dpoly": cmd_dpoly,
    "delta": cmd_delta,
    "reduce": cmd_reduce,
    "member": cmd_member,
    "witness": cmd_witness,
    "lambda": cmd_lambda,
    "pindep": cmd_pindep,
    "basis": cmd_basis,
    "prolong": cmd_prolong,
    "adjoin": cmd_adjoin,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="sepdiff",
                                     description="Differential algebra in characteristic p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=["record", "json"], default="record")
        if name != "selftest":
            p.add_argument("--field", required=True, help='e.g. "GF(3)(c;t)"')
        return p

    command("field", "describe a field presentation")
    p = command("dpoly", "rank data of a differential polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--nonvanishing", action="store_true",
                   help="search K for a point where the polynomial is nonzero")
    p = command("delta", "total derivative")
    p.add_argument("--poly", required=True)
    p.add_argument("--times", type=int, default=1)
    p = command("reduce", "Ritt reduction of --poly by --ideal, with certificate")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p = command("member", "membership in [f]:s_f^oo")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--assert-irreducible", action="store_true")
    p = command("witness", "generic solution of f = 0, g != 0")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--assert-irreducible", action="store_true")
    p = command("lambda", "differential lambda-functions")
    p.add_argument("--b", required=True)
    p.add_argument("--tuple", help="comma-separated a1,...,an for the n-ary functions")
    p = command("pindep", "p-independence of a tuple")
    p.add_argument("--tuple", required=True)
    command("basis", "differential p-basis and degrees of imperfection")
    p = command("prolong", "prolongation equations of an algebraic system")
    p.add_argument("--vars", help="comma-separated variable names (default x)")
    p.add_argument("--poly", action="append", required=True)
    p.add_argument("--point", help="comma-separated coordinates to lift and check")
    p = command("adjoin", "extend a presentation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--root", help="constant generator to take a p-th root of")
    group.add_argument("--constants", help="comma-separated new constant generators")
    p.add_argument("--root-name")
    p = command("selftest", "run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)
    return parser


def run(argv):
    """Execute one command; returns ``(report, parsed args, exit code)``."""
    args = build_parser().parse_args(argv)
    report = Report()
    try:
        if args.command == "selftest":
            cmd_selftest(args, report)
        else:
            K = parse_field(args.field)
            COMMANDS[args.command](args, K, report)
    except errors.SepdiffError as exc:
        failure = Report()
        failure.add("command", args.command)
        failure.add("error", exc.kind)
        failure.add("message", str(exc))
        return failure, args, exc.exit_code
    return report, args, report.exit_code


def main(argv=None):
    report, args, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
