"""Command-line front end.

Exit codes: 0 success, 1 numerical failure, 2 usage error, 3 unreadable or
malformed input file, 4 bound not applicable to the given parameters.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .applications import (
    HarmonicPotential,
    PowerLawPotential,
    SampledPotential,
    StabilitySpec,
    TrapSpec,
    angular_momentum_bound,
    harmonic_trap_bound,
    optimize_partition,
    powerlaw_bound,
    stability_bound,
)
from .density import cs_density_bound, ll_density_bound
from .errors import ConvergenceError, DomainError, InapplicableBoundError, InputFormatError
from .exclusion import (
    C_A_LOWER,
    C_A_UPPER,
    ConstantsRegistry,
    StatisticsKind,
    StatisticsParams,
    xi_H,
    xi_H_approx_small,
    xi_H_lower,
    xi_S,
    xi_S_approx,
)
from .io import read_density_csv, read_potential_csv
from .oracle import counterexample_crossing
from .thermo import (
    GasSpec,
    anyon_gas_bound,
    anyon_potential_bound,
    cs_gas_bound,
    ll_gas_bound,
    ll_potential_bound,
)

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_INAPPLICABLE = 4

CA_ENV = "EXCLUSION_BOUNDS_CA"


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# Argument types
# --------------------------------------------------------------------------

def _number(text):
    t = text.strip().lower()
    if t in ("pi", "π"):
        return math.pi
    if t in ("inf", "+inf", "infinity"):
        return math.inf
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _ca_value(text):
    v = _number(text)
    if not (C_A_LOWER <= v <= C_A_UPPER):
        raise argparse.ArgumentTypeError(
            f"C_A must lie in the allowed range [{C_A_LOWER:g}, pi] = "
            f"[{C_A_LOWER:g}, {C_A_UPPER!r}], got {text}")
    return v


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


# --------------------------------------------------------------------------
# Output helpers
# --------------------------------------------------------------------------

def _jsonable(obj):
    """Plain JSON types; non-finite floats become the strings inf, -inf and nan."""
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        obj = float(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def _digest(command, args, files):
    payload = {"command": command,
               "args": {k: _jsonable(v) for k, v in sorted(vars(args).items())
                        if k not in ("out", "func", "svg")},
               "files": {}}
    for name, path in sorted(files.items()):
        if path is not None:
            try:
                payload["files"][name] = hashlib.sha256(Path(path).read_bytes()).hexdigest()
            except OSError as exc:
                raise InputFormatError(f"cannot read {path}: {exc}") from exc
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _report_json(command, args, report, files=None):
    data = report if isinstance(report, dict) else report.to_dict()
    doc = {
        "command": command,
        "value": data["value"],
        "statistics": data.get("statistics"),
        "constants_used": data.get("constants_used", {}),
        "diagnostics": data.get("diagnostics", {}),
        "inputs_digest": _digest(command, args, files or {}),
    }
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2, allow_nan=False) + "\n"


def schema_path():
    """Location of the JSON schema every report conforms to."""
    return Path(__file__).with_name("schemas") / "bound_report.schema.json"


def _registry(args):
    return ConstantsRegistry(C_A=args.CA)


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def _svg(xs, ys, zs, title):
    """Minimal two-curve line plot."""
    w, h, pad = 480, 320, 40
    xs, ys, zs = (np.asarray(v, dtype=float) for v in (xs, ys, zs))
    x0, x1 = float(xs.min()), float(xs.max())
    both = np.concatenate([ys, zs])
    y0, y1 = float(both.min()), float(both.max())
    sx = (w - 2 * pad) / (x1 - x0) if x1 > x0 else 0.0
    sy = (h - 2 * pad) / (y1 - y0) if y1 > y0 else 0.0

    def path(vals):
        pts = " ".join(f"{pad + (x - x0) * sx:.2f},{h - pad - (y - y0) * sy:.2f}"
                       for x, y in zip(xs, vals))
        return pts

    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">\n'
        f'<text x="{pad}" y="20" font-size="14">{title}</text>\n'
        f'<rect x="{pad}" y="{pad}" width="{w - 2 * pad}" height="{h - 2 * pad}" '
        f'fill="none" stroke="black"/>\n'
        f'<polyline fill="none" stroke="black" points="{path(ys)}"/>\n'
        f'<polyline fill="none" stroke="gray" stroke-dasharray="4 3" points="{path(zs)}"/>\n'
        "</svg>\n"
    )


def cmd_xi(args):
    lo, hi = args.range
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo or lo < 0:
        raise UsageError("--range needs finite 0 <= lo <= hi")
    if args.kind == "H" and hi > 100:
        raise UsageError("--range for H must lie in [0, 100]")
    params = np.array([lo]) if lo == hi else np.linspace(lo, hi, args.steps + 1)
    if args.kind == "S":
        xi = np.array([xi_S(p) for p in params])
        approx = np.asarray(xi_S_approx(params), dtype=float).reshape(-1)
    else:
        xi = np.array([xi_H(p) for p in params])
        approx = np.array([xi_H_approx_small(p) if p <= 1.0 else xi_H_lower(p) for p in params])
    lines = ["param,xi,approx"]
    lines += [f"{p:.17g},{x:.17g},{a:.17g}" for p, x, a in zip(params, xi, approx)]
    _emit("\n".join(lines) + "\n", args.out)
    if args.svg:
        Path(args.svg).write_text(_svg(params, xi, approx, f"xi_{args.kind}"), encoding="utf-8")
    return EXIT_OK


def cmd_bound(args):
    reg = _registry(args)
    files = {"density": args.density}
    if args.density is not None:
        if any(v is not None for v in (args.rhobar, args.N, args.L)):
            raise UsageError("--density excludes --rhobar/--N/--L")
        rho = read_density_csv(args.density)
        if args.ll:
            rep = ll_density_bound(rho, args.eta, reg)
        else:
            rep = cs_density_bound(rho, args.alpha, args.q0, reg)
    else:
        if args.N is None or args.L is None:
            raise UsageError("give --density FILE or --N and --L (with optional --rhobar)")
        if args.rhobar is not None and not math.isclose(args.rhobar * args.L, args.N,
                                                        rel_tol=1e-9):
            raise UsageError("--rhobar must equal N / L")
        if args.ll:
            stats = StatisticsParams(StatisticsKind.LIEB_LINIGER, eta=args.eta)
            rep = ll_gas_bound(GasSpec.from_box(stats, args.N, args.L, args.gamma), reg)
        else:
            rep = cs_gas_bound(args.alpha, args.N / args.L, reg)
    _emit(_report_json("bound", args, rep, files), args.out)
    return EXIT_OK


def cmd_gas(args):
    reg = _registry(args)
    files = {"potential": args.potential}
    if args.anyon:
        if args.fraction is not None:
            stats = StatisticsParams(StatisticsKind.ANYON, alpha=None, fraction=tuple(args.fraction))
        elif args.alpha is not None:
            stats = StatisticsParams(StatisticsKind.ANYON, alpha=args.alpha)
        else:
            raise UsageError("--anyon needs --alpha or --fraction")
        if args.potential is not None:
            pot = read_potential_csv(args.potential)
            if pot.dim != 2:
                raise InputFormatError("anyon potentials need x,y,V samples")
            rep = anyon_potential_bound(pot.V, pot.cell, stats.exact_alpha, args.N, reg)
        else:
            rep = anyon_gas_bound(GasSpec.from_box(stats, args.N, args.L), reg)
    elif args.ll:
        if args.eta is None:
            raise UsageError("--ll needs --eta")
        if args.potential is not None:
            pot = read_potential_csv(args.potential)
            if pot.dim != 1:
                raise InputFormatError("Lieb-Liniger potentials need x,V samples")
            rep = ll_potential_bound(pot.V, pot.cell, args.eta, args.gamma, args.N / args.L, reg)
        else:
            stats = StatisticsParams(StatisticsKind.LIEB_LINIGER, eta=args.eta)
            rep = ll_gas_bound(GasSpec.from_box(stats, args.N, args.L, args.gamma), reg)
    else:
        if args.alpha is None:
            raise UsageError("--cs needs --alpha")
        if args.potential is not None:
            raise UsageError("--potential is not available with --cs; use the confine command")
        rep = cs_gas_bound(args.alpha, args.N / args.L, reg)
    _emit(_report_json("gas", args, rep, files), args.out)
    return EXIT_OK


def cmd_trap(args):
    spec = TrapSpec(args.alpha, args.N, args.omega, args.CA, args.L_angular)
    rep = harmonic_trap_bound(spec)
    if args.L_angular is not None:
        rep.diagnostics["angular_momentum_bound"] = angular_momentum_bound(spec)
    _emit(_report_json("trap", args, rep), args.out)
    return EXIT_OK


def cmd_stability(args):
    spec = StabilitySpec(args.m, args.Z, args.nu, args.K, args.N, args.b)
    rep = stability_bound(spec, _registry(args))
    _emit(_report_json("stability", args, rep), args.out)
    return EXIT_OK


def cmd_confine(args):
    files = {"potential": args.potential}
    extra = None
    if args.harmonic is not None:
        pot = HarmonicPotential(args.harmonic)
        extra = powerlaw_bound(2.0, pot.c, args.alpha, args.N)
    elif args.powerlaw is not None:
        c, mu = args.powerlaw
        pot = PowerLawPotential(c, mu)
        extra = powerlaw_bound(mu, c, args.alpha, args.N)
    else:
        samples = read_potential_csv(args.potential)
        if samples.dim != 1:
            raise InputFormatError("confine needs x,V samples")
        pot = SampledPotential(samples.x, samples.V)
    rep = optimize_partition(pot, args.alpha, args.N)
    if extra is not None:
        rep.diagnostics["asymptotic"] = {"value": extra.value, **extra.diagnostics}
    _emit(_report_json("confine", args, rep, files), args.out)
    return EXIT_OK


def cmd_counterexample(args):
    res = counterexample_crossing(args.N, args.alpha_max, args.epsilon)
    diag = {"alpha_star": res.alpha_star, "lhs_upper": res.lhs_upper, "rhs": res.rhs,
            "epsilon": res.epsilon, "grad_sq": res.grad_sq, "sixth": res.sixth,
            "scan_points": res.scan_points, "found": math.isfinite(res.alpha_star)}
    data = {"value": res.alpha_star, "statistics": {"kind": "CalogeroSutherland"},
            "constants_used": {"C_H": ConstantsRegistry().C_H}, "diagnostics": diag}
    _emit(_report_json("counterexample", args, data), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--CA", type=_ca_value, default=None,
                        help=f"anyon constant C_A in [1e-4, pi] (env {CA_ENV})")

    p = argparse.ArgumentParser(prog="exclusion-bounds",
                                description="Exclusion constants and kinetic energy bounds.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("xi", parents=[common], help="tabulate xi_S or xi_H as CSV")
    s.add_argument("--kind", choices=["S", "H"], required=True)
    s.add_argument("--range", nargs=2, type=_number, required=True, metavar=("LO", "HI"))
    s.add_argument("--steps", type=_positive_int, required=True)
    s.add_argument("--svg", metavar="FILE", help="also write a line plot")
    s.set_defaults(func=cmd_xi)

    s = sub.add_parser("bound", parents=[common], help="density or gas bound (1D)")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ll", action="store_true", help="Lieb-Liniger statistics")
    g.add_argument("--cs", action="store_true", help="Calogero-Sutherland statistics")
    s.add_argument("--eta", type=_number)
    s.add_argument("--gamma", type=_number, default=1.0)
    s.add_argument("--alpha", type=_number)
    s.add_argument("--q0", nargs=2, type=_number, metavar=("A", "B"))
    s.add_argument("--density", metavar="FILE")
    s.add_argument("--rhobar", type=_number)
    s.add_argument("--N", type=_positive_int)
    s.add_argument("--L", type=_number)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("gas", parents=[common], help="homogeneous gas or potential bound")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--anyon", action="store_true")
    g.add_argument("--ll", action="store_true")
    g.add_argument("--cs", action="store_true")
    s.add_argument("--alpha", type=_number)
    s.add_argument("--fraction", nargs=2, type=int, metavar=("MU", "NU"))
    s.add_argument("--eta", type=_number)
    s.add_argument("--gamma", type=_number, default=1.0)
    s.add_argument("--N", type=_positive_int, required=True)
    s.add_argument("--L", type=_number, required=True)
    s.add_argument("--potential", metavar="FILE")
    s.set_defaults(func=cmd_gas)

    s = sub.add_parser("trap", parents=[common], help="anyons in a harmonic trap")
    s.add_argument("--alpha", type=_number, required=True)
    s.add_argument("--N", type=_positive_int, required=True)
    s.add_argument("--omega", type=_number, required=True)
    s.add_argument("--L-angular", dest="L_angular", type=int)
    s.set_defaults(func=cmd_trap)

    s = sub.add_parser("stability", parents=[common], help="anyonic matter with Coulomb forces")
    s.add_argument("--m", type=_number, required=True)
    s.add_argument("--Z", type=_number, required=True)
    s.add_argument("--nu", type=_positive_int, required=True)
    s.add_argument("--K", type=_nonneg_int, required=True)
    s.add_argument("--N", type=_positive_int, required=True)
    s.add_argument("--b", type=_number)
    s.set_defaults(func=cmd_stability)

    s = sub.add_parser("confine", parents=[common], help="confined Calogero-Sutherland particles")
    s.add_argument("--alpha", type=_number, required=True)
    s.add_argument("--N", type=_positive_int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--harmonic", type=_number, metavar="OMEGA")
    g.add_argument("--powerlaw", nargs=2, type=_number, metavar=("C", "MU"))
    g.add_argument("--potential", metavar="FILE")
    s.set_defaults(func=cmd_confine)

    s = sub.add_parser("counterexample", parents=[common],
                       help="crossing point showing the averaged density is needed")
    s.add_argument("--N", type=_positive_int, required=True)
    s.add_argument("--alpha-max", dest="alpha_max", type=_number, required=True)
    s.add_argument("--epsilon", type=_number)
    s.set_defaults(func=cmd_counterexample)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.CA is None:
        env = os.environ.get(CA_ENV)
        if env:
            try:
                args.CA = _ca_value(env)
            except argparse.ArgumentTypeError as exc:
                parser.error(f"{CA_ENV}: {exc}")
        else:
            args.CA = C_A_LOWER
    if args.command == "bound":
        if args.ll and args.eta is None:
            parser.error("--ll needs --eta")
        if args.cs and args.alpha is None:
            parser.error("--cs needs --alpha")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except InputFormatError as exc:
        print(f"exclusion-bounds: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InapplicableBoundError as exc:
        print(f"exclusion-bounds: bound not applicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except DomainError as exc:
        print(f"exclusion-bounds: invalid argument: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"exclusion-bounds: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
