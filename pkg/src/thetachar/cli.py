"""Command-line entry point: one dispatcher over all the modules.

JSON in, JSON out (or aligned tables with --output table); exact values
are printed as rational strings, never decimals.  Exit codes: 0 success,
1 computation/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import amplitude as amp
from . import boundary as bnd
from . import picard as pic
from .characteristics import (
    Characteristic,
    CharSystem,
    enumerate_fundamental_systems,
    enumerate_gopel_systems,
    enumerate_syzygetic_tetrads,
    quartic_coordinate_check,
)
from .config import RunConfig, thread_cap
from .symplectic import arf, enumerate_forms
from .theta import PeriodMatrix, Tolerance, theta_report
from .verify import run_acceptance


def _parse_entry(x) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if (
        isinstance(x, list)
        and len(x) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in x)
    ):
        return complex(x[0], x[1])
    raise ValueError(f"entries are numbers or [re, im] pairs, got {x!r}")


def parse_period_matrix(text: str, g: int) -> PeriodMatrix:
    """Parse a g x g complex matrix from JSON rows of numbers/[re, im] pairs."""
    data = json.loads(text)
    if not isinstance(data, list) or len(data) != g:
        raise ValueError(f"tau must be a JSON list of {g} rows")
    rows = []
    for row in data:
        if not isinstance(row, list):
            raise ValueError(f"tau rows must be JSON lists, got {row!r}")
        if len(row) == g:
            rows.append([_parse_entry(x) for x in row])
        elif g == 1 and len(row) == 2:
            # a bare [re, im] row for the 1x1 case
            rows.append([_parse_entry(row)])
        else:
            raise ValueError(f"tau row has {len(row)} entries, expected {g}")
    return PeriodMatrix(np.array(rows, dtype=complex))


def parse_z(text: str, g: int) -> list[complex]:
    data = json.loads(text)
    if not isinstance(data, list) or len(data) != g:
        raise ValueError(f"z must be a JSON list of {g} entries")
    return [_parse_entry(x) for x in data]


def _emit(payload: dict, cfg: RunConfig) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
        return
    width = max(len(key) for key in payload)
    for key, value in payload.items():
        rendered = value if isinstance(value, (str, int, bool, float)) else json.dumps(value)
        print(f"{key:<{width}}  {rendered}")


def _cmd_forms(args, cfg: RunConfig) -> int:
    forms = enumerate_forms(args.genus, args.parity)
    if args.count:
        print(len(forms))
        return 0
    listed = []
    for q in forms:
        qe_hex, qf_hex = q.to_hex().split(":")
        listed.append({"qe": qe_hex, "qf": qf_hex, "arf": arf(q)})
    _emit(
        {"genus": args.genus, "parity": args.parity, "count": len(forms), "forms": listed},
        cfg,
    )
    return 0


def _cmd_systems(args, cfg: RunConfig) -> int:
    g = args.genus
    if args.kind == "aronhold":
        if g != 3:
            raise ValueError("the aronhold census is a genus-3 computation; use --genus 3")
        census = quartic_coordinate_check()
        if args.count:
            print(census["azygetic_odd_7set_count"])
            return 0
        _emit(census, cfg)
        return 0
    if args.kind == "tetrads":
        systems = [CharSystem.sorted_system(t) for t in enumerate_syzygetic_tetrads(g)]
    elif args.kind == "fundamental":
        systems = enumerate_fundamental_systems(g)
    else:
        systems = enumerate_gopel_systems(g)
    if args.count:
        print(len(systems))
        return 0
    _emit(
        {
            "genus": g,
            "kind": args.kind,
            "count": len(systems),
            "systems": [s.to_json_dict() for s in systems],
        },
        cfg,
    )
    return 0


def _cmd_theta(args, cfg: RunConfig) -> int:
    tol = Tolerance(cfg.tolerance)
    char = Characteristic.from_string(args.char)
    if char.g != args.genus:
        raise ValueError(f"characteristic has genus {char.g}, --genus says {args.genus}")
    tau = parse_period_matrix(args.tau, args.genus)
    z = parse_z(args.z, args.genus) if args.z else None
    report = theta_report(tau, z, char, tol)
    report["tolerance"] = tol.abs_tol
    _emit(report, cfg)
    return 0


def _cmd_amplitude(args, cfg: RunConfig) -> int:
    tol = Tolerance(cfg.tolerance)
    if args.mode == "check-factorization":
        tau1 = parse_period_matrix(args.tau1, args.k)
        tau2 = parse_period_matrix(args.tau2, args.g - args.k)
        residual = amp.factorization_residual(args.g, args.k, tau1, tau2, tol)
        _emit(
            {"g": args.g, "k": args.k, "residual": residual, "tolerance": tol.abs_tol},
            cfg,
        )
        return 0
    if args.genus is None or args.tau is None:
        raise ValueError("amplitude needs --genus and --tau")
    tau = parse_period_matrix(args.tau, args.genus)
    xi = amp.xi_g(tau, args.genus, tol)
    per_i = []
    for i in range(args.genus + 1):
        value = amp.P_i_g(tau, args.genus, i, tol)
        per_i.append({"i": i, "re": value.real, "im": value.imag})
    _emit(
        {
            "genus": args.genus,
            "xi_re": xi.real,
            "xi_im": xi.imag,
            "per_i": per_i,
            "tolerance": tol.abs_tol,
        },
        cfg,
    )
    return 0


def _cmd_boundary(args, cfg: RunConfig) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        graph = bnd.DualGraph.from_json_dict(json.load(fh))
    if args.report == "components":
        _emit(bnd.th_components(graph).to_json_dict(), cfg)
        return 0
    _, g = bnd.betti_and_genus(graph)
    degrees = []
    for i in range(g // 2 + 1):
        deg_a, deg_b = bnd.boundary_degrees_odd(g, i)
        degrees.append({"i": i, "deg_A": deg_a, "deg_B": deg_b})
    _emit({"genus": g, "degrees": degrees}, cfg)
    return 0


def _cmd_picard(args, cfg: RunConfig) -> int:
    space = pic.resolve_space(args.space)
    g = args.genus
    if args.report == "verdict":
        print(pic.general_type_test(g, space))
        return 0
    if args.report == "slope":
        _emit(pic.slope_combination(g, space).to_json_dict(), cfg)
        return 0
    theta_name = "Z_odd" if space == "Sbar_minus" else "ThetaNull"
    classes = {theta_name: pic.named_class(g, theta_name).to_json_dict()}
    if g >= 4:
        classes["canonical"] = pic.canonical_class(g, space).to_json_dict()
    if g >= 3:
        bn = pic.named_class(g, "BN_normalized")
        classes["BN_normalized"] = bn.to_json_dict()
        classes["BN_pullback"] = pic.pullback(bn, space).to_json_dict()
    _emit(
        {
            "space": space,
            "genus": g,
            "bn_applicable": pic.bn_applicable(g),
            "classes": classes,
        },
        cfg,
    )
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    report = run_acceptance(cfg, only=args.only)
    if cfg.output == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for line in report.render_lines():
            print(line)
    return 0 if report.passed else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    # Also accepted after the subcommand; SUPPRESS keeps an absent flag
    # from clobbering the value parsed by the main parser.
    p.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    p.add_argument(
        "--output",
        choices=("json", "table"),
        default=argparse.SUPPRESS,
        help=argparse.SUPPRESS,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetachar",
        description="Theta characteristics: enumeration, numerics, and moduli slopes.",
    )
    parser.add_argument("--config", help="JSON file overriding the run configuration")
    parser.add_argument(
        "--output", choices=("json", "table"), help="report format (default json)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forms", help="enumerate quadratic forms / characteristics")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--parity", choices=("even", "odd", "all"), default="all")
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_common(p)
    p.set_defaults(handler=_cmd_forms)

    p = sub.add_parser("systems", help="enumerate characteristic systems")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument(
        "--kind",
        choices=("tetrads", "fundamental", "gopel", "aronhold"),
        required=True,
    )
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_common(p)
    p.set_defaults(handler=_cmd_systems)

    p = sub.add_parser("theta", help="evaluate a theta function with characteristic")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--tau", required=True, help="period matrix as JSON rows of [re, im]")
    p.add_argument("--char", required=True, help="characteristic 'epsbits;deltabits'")
    p.add_argument("--z", help="argument vector as JSON (default 0)")
    p.add_argument("--tol", type=float, help="absolute truncation tolerance")
    _add_common(p)
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("amplitude", help="subspace sums and the Xi combination")
    p.add_argument("--genus", type=int)
    p.add_argument("--tau", help="period matrix as JSON rows of [re, im]")
    p.add_argument("--tol", type=float, help="absolute truncation tolerance")
    amp_sub = p.add_subparsers(dest="mode")
    q = amp_sub.add_parser(
        "check-factorization", help="residual of Xi(diag) against the product"
    )
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--tau1", required=True)
    q.add_argument("--tau2", required=True)
    q.add_argument("--tol", type=float, help="absolute truncation tolerance")
    _add_common(p)
    _add_common(q)
    p.set_defaults(handler=_cmd_amplitude, mode=None)
    q.set_defaults(handler=_cmd_amplitude, mode="check-factorization")

    p = sub.add_parser("boundary", help="dual-graph fibre reports")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--report", choices=("components", "degrees"), default="components")
    _add_common(p)
    p.set_defaults(handler=_cmd_boundary)

    p = sub.add_parser("picard", help="divisor classes, slopes, verdicts")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument(
        "--space", choices=("odd", "even", "Sbar_minus", "Sbar_plus"), required=True
    )
    p.add_argument("--report", choices=("classes", "slope", "verdict"), default="slope")
    _add_common(p)
    p.set_defaults(handler=_cmd_picard)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--seed", type=int, help="seed for randomized checks")
    p.add_argument(
        "--only",
        type=int,
        nargs="+",
        metavar="N",
        help="run only these 1-based criteria",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_verify, only=None)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        thread_cap()
        cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
        cfg = cfg.override(
            output=args.output,
            tolerance=getattr(args, "tol", None),
            seed=getattr(args, "seed", None),
        )
        return args.handler(args, cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
