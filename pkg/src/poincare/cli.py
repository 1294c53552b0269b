"""Command-line entry point.

    poincare multiplier --polar 1.4142135623730951 0.7853981633974483 --method riggs --json
    poincare optimal-degree --polar 1 0.8975979 --search 10
    poincare ratio-table --s 4 --csv

Exit status: 0 on success, 2 on domain errors (real roots, not positive,
failed verification), 1 on internal faults, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .compare import compare, ratio_table
from .composer import compose_multiplier, factor
from .errors import DomainError, PoincareError
from .multiplier import METHODS, MultiplierCertificate, check, optimal_degree
from .optimality import feasibility_table, minimal_degree_search
from .poly import PolarQuadratic, Polynomial, from_polar, to_polar
from .tmatrix import compute_T

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

SUBCOMMANDS = ("multiplier", "verify", "optimal-degree", "tmatrix", "compare", "ratio-table", "factor")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    f: str | None = None
    polar: tuple[float, float] | None = None
    degrees: bool = False
    method: str = "riggs"
    tol: float | None = None
    format: str = "human"
    compose: bool = False
    s: int | None = None
    search: int | None = None
    cert: str | None = None


def fmt(x: float) -> str:
    return format(float(x), ".12g")


def fmt_vec(v) -> str:
    return ", ".join(fmt(x) for x in v)


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _quadratic(cfg: RunConfig) -> PolarQuadratic:
    if cfg.polar is not None:
        r, theta = cfg.polar
        if cfg.degrees:
            theta = math.radians(theta)
        return PolarQuadratic(r, theta)
    if cfg.f is None:
        raise UsageError("one of --f or --polar is required")
    return to_polar(Polynomial.parse(cfg.f))


def _human_cert(cert: MultiplierCertificate, verified: bool) -> str:
    lines = [
        f"f: {cert.f}",
        f"g: {cert.g}",
        f"s: {cert.s}",
        f"c: {fmt_vec(cert.c)}",
        f"product: {cert.product}",
        f"provenance: {cert.provenance.value}" + (" (composed)" if cert.composed else ""),
        f"optimality: {cert.optimality}",
        f"verified: {str(verified).lower()}",
    ]
    return "\n".join(lines) + "\n"


def _run_multiplier(cfg: RunConfig) -> tuple[int, str]:
    if cfg.compose:
        f = Polynomial.parse(cfg.f) if cfg.f is not None else from_polar(_quadratic(cfg))
        cert = compose_multiplier(f)
    else:
        if cfg.f is not None and Polynomial.parse(cfg.f).degree != 2:
            raise DomainError("--f without --compose must be a monic quadratic")
        if cfg.method not in METHODS:
            raise UsageError(f"unknown method {cfg.method!r}")
        cert = METHODS[cfg.method](_quadratic(cfg))
    if cfg.tol is not None:
        cert = dataclasses.replace(cert, tol=cfg.tol)
    verified = bool(check(cert))
    if cfg.format == "json":
        return EXIT_OK, dump_json(cert.to_dict(verified=verified))
    return EXIT_OK, _human_cert(cert, verified)


def _run_verify(cfg: RunConfig) -> tuple[int, str]:
    if not cfg.cert:
        raise UsageError("verify needs a certificate file")
    try:
        doc = json.loads(Path(cfg.cert).read_text())
        cert = MultiplierCertificate.from_dict(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"unreadable certificate: {exc}") from exc
    rep = check(cert)
    status = EXIT_OK if rep else EXIT_DOMAIN
    if cfg.format == "json":
        return status, dump_json({"verified": bool(rep), "checks": rep.checks, "failures": rep.failures})
    if rep:
        return status, "verified: true\n"
    return status, "verified: false\nfailed: " + ", ".join(rep.failures) + "\n"


def _run_optimal_degree(cfg: RunConfig) -> tuple[int, str]:
    pq = _quadratic(cfg)
    s = optimal_degree(pq.theta)
    doc: dict = {"r": pq.r, "theta": pq.theta, "s": s}
    if cfg.search is not None:
        doc["search"] = {
            "t_max": cfg.search,
            "minimum": minimal_degree_search(pq, cfg.search),
            "table": [{"t": t, "feasible": ok} for t, ok in feasibility_table(pq, cfg.search)],
        }
    if cfg.format == "json":
        return EXIT_OK, dump_json(doc)
    out = f"s = {s}\n"
    if "search" in doc:
        out += f"search minimum = {doc['search']['minimum']}\n"
        out += "t,feasible\n"
        for row in doc["search"]["table"]:
            out += f"{row['t']},{str(row['feasible']).lower()}\n"
    return EXIT_OK, out


def _run_tmatrix(cfg: RunConfig) -> tuple[int, str]:
    pq = _quadratic(cfg)
    s = optimal_degree(pq.theta) if cfg.s is None else cfg.s
    return EXIT_OK, compute_T(pq, s).to_csv()


def _run_compare(cfg: RunConfig) -> tuple[int, str]:
    rep = compare(_quadratic(cfg))
    doc = rep.to_dict()
    if cfg.format == "json":
        return EXIT_OK, dump_json(doc)
    lines = [
        f"s: {rep.s}",
        f"g_R: {rep.g_R}",
        f"g_M*: {rep.g_M}",
        f"c_R: {fmt_vec(rep.c_R)}",
        f"c_M: {fmt_vec(rep.c_M)}",
        f"ratios: {fmt_vec(rep.coeff_ratios)}",
        f"equal: {str(rep.equal).lower()}",
        f"ordering_holds: {str(rep.ordering_holds).lower()}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def _run_ratio_table(cfg: RunConfig) -> tuple[int, str]:
    if cfg.s is None:
        raise UsageError("ratio-table needs --s")
    return EXIT_OK, ratio_table(cfg.s).to_csv()


def _run_factor(cfg: RunConfig) -> tuple[int, str]:
    if cfg.f is None:
        raise UsageError("factor needs --f")
    fac = factor(Polynomial.parse(cfg.f))
    if cfg.format == "json":
        return EXIT_OK, dump_json(fac.to_dict())
    lines = [f"linear: root={fmt(r)} multiplicity={m}" for r, m in fac.linear_factors]
    lines += [
        f"quadratic: {from_polar(pq)} (r={fmt(pq.r)}, theta={fmt(pq.theta)}) multiplicity={m}"
        for pq, m in fac.quadratic_factors
    ]
    lines.append(f"residual: {fmt(fac.residual_error)}")
    return EXIT_OK, "\n".join(lines) + "\n"


_DISPATCH = {
    "multiplier": _run_multiplier,
    "verify": _run_verify,
    "optimal-degree": _run_optimal_degree,
    "tmatrix": _run_tmatrix,
    "compare": _run_compare,
    "ratio-table": _run_ratio_table,
    "factor": _run_factor,
}


def _error_doc(exc: Exception) -> str:
    return dump_json({"error": type(exc).__name__, "message": str(exc)})


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one subcommand; returns ``(exit status, document)``."""
    try:
        return _DISPATCH[cfg.subcommand](cfg)
    except UsageError:
        raise
    except (DomainError, PoincareError) as exc:
        return EXIT_DOMAIN, _error_doc(exc)
    except ValueError as exc:
        # malformed numeric input
        return EXIT_DOMAIN, _error_doc(exc)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--f", metavar="COEFFS", help='ascending coefficients, e.g. "2,-2,1"')
    grp.add_argument("--polar", nargs=2, type=float, metavar=("R", "THETA"))
    p.add_argument("--degrees", action="store_true", help="THETA is in degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poincare", description="Optimal-degree Poincaré multipliers")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("multiplier", help="construct and certify a multiplier")
    _add_input(p)
    p.add_argument("--method", choices=sorted(METHODS), default="riggs")
    p.add_argument("--compose", action="store_true", help="any-degree f via factorization")
    p.add_argument("--tol", type=float)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="re-check a certificate JSON file")
    p.add_argument("cert", metavar="CERT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("optimal-degree", help="ceil(pi/theta) - 2, optionally with the cone search")
    _add_input(p)
    p.add_argument("--search", type=int, metavar="T_MAX")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tmatrix", help="T = R^-1 L as CSV")
    _add_input(p)
    p.add_argument("--s", type=int)

    p = sub.add_parser("compare", help="Riggs vs monic Meissner")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("ratio-table", help="coefficient ratios at ten angles (figure data)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="CSV output (the only format)")

    p = sub.add_parser("factor", help="real factorization of a monic polynomial")
    p.add_argument("--f", required=True, metavar="COEFFS")
    p.add_argument("--json", action="store_true")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    polar = tuple(ns.polar) if getattr(ns, "polar", None) else None
    return RunConfig(
        subcommand=ns.subcommand,
        f=getattr(ns, "f", None),
        polar=polar,
        degrees=getattr(ns, "degrees", False),
        method=getattr(ns, "method", "riggs"),
        tol=getattr(ns, "tol", None),
        format="json" if getattr(ns, "json", False) else "human",
        compose=getattr(ns, "compose", False),
        s=getattr(ns, "s", None),
        search=getattr(ns, "search", None),
        cert=getattr(ns, "cert", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        status, doc = run(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"poincare: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # internal fault
        sys.stdout.write(_error_doc(exc))
        return EXIT_INTERNAL
    sys.stdout.write(doc)
    return status


if __name__ == "__main__":
    sys.exit(main())
