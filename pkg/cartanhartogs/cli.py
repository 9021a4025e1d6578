"""Command-line front end of cartanhartogs."""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .base.domains import DomainSpec, hua_factors, hua_polynomial, \
    parse_domain
from .base.exactmath import RatPoly, to_rational
from .base.exceptions import (DomainError, PolynomialError, OracleError,
                              KernelError, CriterionChainError,
                              SearchLimitExceededError)
from .config import Config, read_config
from .hua.decomp import (decompose_chi, representative_polynomial, q_poly,
                         normalized_derivative)
from .kernel.bergman import (xi_eta, bergman_kernel, range_lemma_check,
                             kernel_sign_change)
from .kernel.norm import HartogsPoint
from .luqikeng.table import ThresholdTable
from .luqikeng.threshold import threshold, m_omega
from .luqikeng.verdict import decide, halfplane_root_count
from .oracle.suite import OracleSuite


__all__ = ["EXIT_LU_QIKENG", "EXIT_NOT_LU_QIKENG", "EXIT_ERROR",
           "EXIT_BOUNDARY", "format_factors", "build_parser", "main"]


EXIT_LU_QIKENG = 0
EXIT_NOT_LU_QIKENG = 1
EXIT_ERROR = 2
EXIT_BOUNDARY = 3


def _rat(value: Fraction) -> str:
    return str(value)


def _coeffs(p: RatPoly) -> List[str]:
    return [_rat(c) for c in p.coefficients] if not p.is_zero() else ["0"]


def format_factors(spec: DomainSpec) -> str:
    """
    Render chi as a product of linear factors, e.g. '(s+1)(s+3/2)(s+2)'.

    :param spec: domain specification
    :return: the product, without parentheses for a single factor
    """
    factors = hua_factors(spec)
    if len(factors) == 1 and factors[0][1] == 1:
        return f"s+{factors[0][0]}"
    text = ""
    for c, mult in factors:
        text += f"(s+{c})" + (f"^{mult}" if mult > 1 else "")
    return text


def _complex_vector(text: Optional[str]) -> Optional[np.ndarray]:
    if text is None:
        return None
    return np.array([complex(_.strip().replace(" ", ""))
                     for _ in text.split(",") if _.strip()])


def _emit(args: argparse.Namespace, data: Dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _spec(args: argparse.Namespace) -> DomainSpec:
    return parse_domain(args.type, args.raw)


def _config(args: argparse.Namespace) -> Config:
    config = read_config(args.config) if args.config else Config()
    if args.tol is not None:
        config.generic['tol'] = to_rational(args.tol)
    if args.seed is not None:
        config.generic['seed'] = args.seed
    return config


def _spec_data(spec: DomainSpec) -> Dict[str, Any]:
    return {"type": spec.name, "a": spec.a, "b": spec.b, "r": spec.r,
            "d": spec.d, "g": spec.g}


def cmd_chi(args: argparse.Namespace) -> int:
    spec = _spec(args)
    chi = hua_polynomial(spec)
    factored = format_factors(spec)
    data = _spec_data(spec)
    data.update({"factored": factored, "coefficients": _coeffs(chi)})
    _emit(args, data, f"chi(s) = {factored}\n"
                      f"coefficients = [{', '.join(_coeffs(chi))}]")
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    spec = _spec(args)
    c_list = decompose_chi(spec)
    data = _spec_data(spec)
    data["chi"] = _coeffs(hua_polynomial(spec))
    data["C"] = [_coeffs(c) for c in c_list]
    lines = [f"chi(s) = {hua_polynomial(spec).to_string('s')}"]
    lines.extend(f"C_{j} = {c.to_string('mu')}" for j, c in enumerate(c_list))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    spec = _spec(args)
    poly = representative_polynomial(spec, args.m)
    data = _spec_data(spec)
    data["m"] = args.m
    if args.mu is None:
        data["eta_coefficients"] = [_coeffs(c)
                                    for c in poly.eta_coefficients]
        text = f"P^{args.m}(eta) = {poly}"
    else:
        mu = to_rational(args.mu)
        at_mu = poly.at_mu(mu)
        data.update({"mu": _rat(mu), "coefficients": _coeffs(at_mu)})
        text = f"P_{mu}^{args.m}(eta) = {at_mu.to_string('eta')}"
    _emit(args, data, text)
    return 0


def cmd_qpoly(args: argparse.Namespace) -> int:
    spec = _spec(args)
    if args.order:
        q = normalized_derivative(spec, args.m, args.order)
        name = f"q_{args.m}^{args.order}"
    else:
        q = q_poly(spec, args.m)
        name = f"q_{args.m}"
    data = _spec_data(spec)
    data.update({"m": args.m, "order": args.order,
                 "coefficients": _coeffs(q)})
    _emit(args, data, f"{name}(mu) = {q.to_string('mu')}")
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    spec = _spec(args)
    verdict = decide(spec, args.m, args.mu, count_roots=args.count_roots)
    data = _spec_data(spec)
    data.update({"m": verdict.m, "mu": _rat(verdict.mu),
                 "is_lu_qikeng": verdict.is_lu_qikeng,
                 "boundary": verdict.boundary,
                 "right_halfplane_root_count":
                     verdict.right_halfplane_root_count,
                 "method": [list(_) for _ in verdict.method]})
    status = "Lu Qikeng" if verdict.is_lu_qikeng else "not Lu Qikeng"
    if verdict.boundary:
        status += " (boundary)"
    lines = [f"{spec.name}, m = {verdict.m}, mu = {verdict.mu}: {status}"]
    lines.extend(f"  {name:24s} {value}" for name, value in verdict.method)
    if verdict.right_halfplane_root_count >= 0:
        lines.append(f"  roots with Re eta > 1/2: "
                     f"{verdict.right_halfplane_root_count}")
    _emit(args, data, "\n".join(lines))
    if verdict.boundary:
        return EXIT_BOUNDARY
    return EXIT_LU_QIKENG if verdict.is_lu_qikeng else EXIT_NOT_LU_QIKENG


def cmd_threshold(args: argparse.Namespace) -> int:
    spec = _spec(args)
    tol = _config(args).generic['tol']
    report = threshold(spec, args.m, tol)
    data = _spec_data(spec)
    data.update({"m": args.m, "tol": _rat(report.tol),
                 "q": _coeffs(report.q_poly),
                 "verified_sufficient": report.verified_sufficient,
                 "roots": [{"lo": _rat(root.interval.lo),
                            "hi": _rat(root.interval.hi),
                            "value": _rat(root.value),
                            "decimal": f"{float(root.value):.9f}"}
                           for root in report.roots]})
    lines = [f"q_{args.m}(mu) = {report.q_poly.to_string('mu')}"]
    for i in (1, 2):
        root = report.roots[i-1] if len(report.roots) >= i else None
        value = "+inf" if root is None else f"{float(root.value):.9f}"
        lines.append(f"mu_{{{args.m},{i}}} = {value}")
    for root in report.roots[2:]:
        lines.append(f"further root = {float(root.value):.9f}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_momega(args: argparse.Namespace) -> int:
    spec = _spec(args)
    config = _config(args)
    report = m_omega(spec, config.threshold['window'],
                     config.threshold['m_cap'])
    data = _spec_data(spec)
    data.update(report._asdict())
    how = "certificate" if report.certificate else \
        f"window of {report.window}"
    _emit(args, data, f"m_Omega = {report.m_omega} "
                      f"({'proven' if report.proven else 'checked'}, {how})")
    return 0


def cmd_rootcount(args: argparse.Namespace) -> int:
    spec = _spec(args)
    config = _config(args)
    count = halfplane_root_count(spec, args.m, args.mu,
                                 config.oracle['root_tol'],
                                 config.oracle['ambiguity_factor'])
    data = _spec_data(spec)
    data.update({"m": args.m, "mu": _rat(to_rational(args.mu)),
                 "count": count.count, "all_real": count.all_real,
                 "ambiguous": count.ambiguous,
                 "roots": [[r.real, r.imag] for r in count.roots]})
    _emit(args, data, f"{count.count} roots with Re eta > 1/2"
                      f"{', all real' if count.all_real else ''}")
    return 0


def cmd_kernel_eval(args: argparse.Namespace) -> int:
    spec = _spec(args)
    config = _config(args)
    mu = to_rational(args.mu)
    data = _spec_data(spec)
    data.update({"m": args.m, "mu": _rat(mu)})
    lines = []
    if args.z is not None:
        z, big_z = _complex_vector(args.z), _complex_vector(args.Z)
        w = z if args.w is None else _complex_vector(args.w)
        big_w = big_z if args.W is None else _complex_vector(args.W)
        p, q = HartogsPoint(z, big_z), HartogsPoint(w, big_w)
        xi, eta = xi_eta(spec, mu, p, q)
        value = bergman_kernel(spec, args.m, mu, p, q)
        data.update({"xi": [xi.real, xi.imag], "eta": [eta.real, eta.imag],
                     "kernel": [value.real, value.imag]})
        lines.append(f"xi = {xi}\neta = {eta}\nK = {value}")
    if args.pairs:
        report = range_lemma_check(spec, args.m, mu, args.pairs,
                                   config.generic['seed'],
                                   config.oracle['mc_batch'])
        data["range_lemma"] = report._asdict()
        lines.append(f"{report.num_pairs} pairs: max |xi| = "
                     f"{report.max_abs_xi:.6f}, min Re eta = "
                     f"{report.min_re_eta:.6f}, violations = "
                     f"{report.violations}")
    if not lines:
        change = kernel_sign_change(spec, args.m, mu,
                                    config.kernel['sign_grid'])
        if change is None:
            data["sign_change"] = None
            lines.append("no sign change along xi = -t")
        else:
            data["sign_change"] = {"t": change.t, "eta": change.eta}
            lines.append(f"kernel vanishes at |Z|^2 = {change.t:.12f}, "
                         f"eta = {change.eta:.12f}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite = OracleSuite(_config(args), enable_mpi=args.mpi)
    if args.suite == "all":
        results = suite.run_all(verbose=not args.json)
    else:
        results = [getattr(suite, f"run_{args.suite}")()]
    if args.json and suite.is_master:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    elif not args.json and args.suite != "all":
        for r in results:
            print(f"{r.name}: {'passed' if r.passed else 'FAILED'}")
    return 0 if all(r.passed for r in results) else 1


def cmd_table(args: argparse.Namespace) -> int:
    config = _config(args)
    if args.types:
        config.table['types'] = args.types
    if args.m_max is not None:
        config.table['m_max'] = args.m_max
    table = ThresholdTable(config, enable_mpi=args.mpi)
    rows = table.run(verbose=not args.json)
    if args.csv:
        if table.is_master:
            with open(args.csv, "w") as f:
                f.write(table.to_csv(rows))
    if args.json:
        if table.is_master:
            print(json.dumps(table.to_json(rows), indent=2))
    else:
        table.report(rows)
    return 0 if table.all_match(rows) else 1


def _add_type(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("type", nargs="?", default=None,
                        help="domain type, e.g. 'I_{1,3}' or 'IV_4'")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with one sub-command per pipeline stage.

    :return: the parser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit JSON, rationals as 'p/q' strings")
    common.add_argument("--tol", default=None,
                        help="refinement tolerance, decimal or 'p/q'")
    common.add_argument("--seed", type=int, default=None,
                        help="seed of random sampling")
    common.add_argument("--raw", type=int, nargs=3, default=None,
                        metavar=("A", "B", "R"),
                        help="raw invariants (a, b, r) instead of a type")
    common.add_argument("--config", default=None,
                        help="pickled Config file")

    parser = argparse.ArgumentParser(
        prog="cartanhartogs",
        description="Lu Qikeng problem for Cartan-Hartogs domains")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="Hua polynomial")
    _add_type(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("decompose", parents=[common],
                       help="raising-factorial decomposition of chi")
    _add_type(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("poly", parents=[common], help="polynomial P_mu^m")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("qpoly", parents=[common],
                       help="q_m or its normalized derivatives")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, default=0)
    p.set_defaults(func=cmd_qpoly)

    p = sub.add_parser("decide", parents=[common],
                       help="decide the Lu Qikeng property")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--count-roots", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("threshold", parents=[common],
                       help="positive roots of q_m")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("momega", parents=[common], help="integer m_Omega")
    _add_type(p)
    p.set_defaults(func=cmd_momega)

    p = sub.add_parser("rootcount", parents=[common],
                       help="roots of P_mu^m with Re eta > 1/2")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_rootcount)

    p = sub.add_parser("kernel-eval", parents=[common],
                       help="Bergman kernel evaluation and checks")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--z", default=None, help="comma-separated complex")
    p.add_argument("--Z", default=None, help="comma-separated complex")
    p.add_argument("--w", default=None, help="defaults to z")
    p.add_argument("--W", default=None, help="defaults to Z")
    p.add_argument("--pairs", type=int, default=0,
                   help="number of random pairs of a range lemma check")
    p.set_defaults(func=cmd_kernel_eval)

    p = sub.add_parser("verify", parents=[common], help="oracle suites")
    p.add_argument("--suite", default="all",
                   choices=["all", "hua_integrals", "selberg",
                            "localization", "decide_agreement",
                            "range_lemma"])
    p.add_argument("--mpi", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common],
                       help="threshold table of the domains of dim <= 4")
    p.add_argument("--all", action="store_true",
                   help="all tabulated types, the default")
    p.add_argument("--types", nargs="+", default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--csv", default=None, help="CSV output file")
    p.add_argument("--mpi", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    :param argv: arguments, sys.argv[1:] if None
    :return: exit code, 0 Lu Qikeng or success, 1 not Lu Qikeng or failed
        check, 3 boundary, 2 parse or computation error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_ERROR if err.code else 0
    try:
        return args.func(args)
    except (DomainError, PolynomialError, OracleError, KernelError,
            CriterionChainError, SearchLimitExceededError,
            ValueError, TypeError, ZeroDivisionError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
