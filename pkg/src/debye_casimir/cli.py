"""Command-line front end.

Exit codes: 0 success, 1 computational or verification failure, 2 usage
error.  Every subcommand accepts ``--json``, ``--rel-tol``, ``--abs-tol``
and ``--config FILE``; the config file holds flat ``key = value`` lines
(keys are option names, dashes or underscores) and command-line flags
override it.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import cutoff, surface, thermo
from .model import PlasmaParameters, QuadratureSpec, ValidationError, make_geometry
from .quadrature import ConvergenceError
from .verification import format_table, run_checks

CSV_COLUMNS = ("x", "I_f", "I_L", "I_U", "f_red", "F_red", "U_red", "S_red", "dU_surface_red")
OUTPUT_COLUMNS = {
    "I_f": "I_f", "I_L": "I_L", "I_U": "I_U",
    "f": "f_red", "F_c": "F_red", "U_c": "U_red", "S_c": "S_red", "dU_surface": "dU_surface_red",
}


class UsageError(Exception):
    pass


def _spec(args) -> QuadratureSpec:
    kw = {}
    if args.rel_tol is not None:
        kw["rel_tol"] = args.rel_tol
    if args.abs_tol is not None:
        kw["abs_tol"] = args.abs_tol
    return QuadratureSpec(**kw)


def _common(p):
    p.add_argument("--json", action="store_true", help="emit a JSON object")
    p.add_argument("--rel-tol", type=float, default=None, help="quadrature relative tolerance")
    p.add_argument("--abs-tol", type=float, default=None, help="quadrature absolute tolerance")
    p.add_argument("--config", default=None, help="flat key=value file of defaults")


def _mode_flags(p):
    p.add_argument("--x", type=float, default=None, help="reduced gap kappa*a")
    p.add_argument("--reduced", action="store_true", help="report reduced quantities (implied by --x)")
    p.add_argument("--kappa", type=float, default=None, help="inverse Debye length, 1/cm")
    p.add_argument("--beta", type=float, default=None, help="inverse temperature, 1/erg")
    p.add_argument("--a", type=float, default=None, help="gap width, cm")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debye-casimir",
        description="Casimir force and surface energy of a classical Debye-Hueckel plasma.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("force", "Casimir force per unit area"),
                        ("energy", "Casimir free and internal energy per unit area"),
                        ("entropy", "Casimir entropy per unit area")):
        p = sub.add_parser(name, help=help_)
        _mode_flags(p)
        _common(p)

    p = sub.add_parser("surface", help="surface-energy ledger and the Casimir equality")
    _mode_flags(p)
    p.add_argument("--d", type=float, default=1.0, help="slab thickness for bulk terms, cm")
    _common(p)

    p = sub.add_parser("sweep", help="tabulate reduced quantities over a grid of x to CSV")
    p.add_argument("--x-min", type=float, default=None, help="required, here or in --config")
    p.add_argument("--x-max", type=float, default=None, help="required, here or in --config")
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    p.add_argument("--outputs", default=",".join(OUTPUT_COLUMNS),
                   help="comma-separated subset of " + ",".join(OUTPUT_COLUMNS))
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=1, help="rows computed concurrently")
    _common(p)

    p = sub.add_parser("verify", help="run the identity and oracle checks",
                       description="Here --rel-tol replaces every check tolerance.")
    _common(p)

    p = sub.add_parser("cutoff", help="time-splitting cutoff from surface tension")
    p.add_argument("--epsilon-minus-1", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True, help="surface tension, dyne/cm")
    _common(p)
    return parser


def _read_config(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, val = (s.strip() for s in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


def parse_args(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        try:
            cfg = _read_config(args.config)
        except OSError as exc:
            parser.error(f"cannot read config: {exc}")
        except UsageError as exc:
            parser.error(str(exc))
        known = {a.dest: a for a in sub._actions}
        unknown = sorted(set(cfg) - set(known) - {"config"})
        if unknown:
            parser.error(f"unknown config keys: {', '.join(unknown)}")
        for key, val in cfg.items():
            action = known.get(key)
            if action is None:
                continue
            if action.nargs == 0:
                val = val.lower() in ("1", "true", "yes", "on")
            sub.set_defaults(**{key: val})
        args = parser.parse_args(argv)
    return parser, args


def _resolve_mode(args):
    dims = [args.kappa, args.beta, args.a]
    if args.x is not None:
        if any(v is not None for v in dims):
            raise UsageError("--x is exclusive with --kappa/--beta/--a")
        if args.x < 0.0 or math.isnan(args.x):
            raise UsageError("--x must be >= 0")
        params = PlasmaParameters.from_kappa(1.0, 1.0)
        return True, params, args.x
    if all(v is None for v in dims):
        raise UsageError("give either --x or all of --kappa, --beta, --a")
    if any(v is None for v in dims):
        raise UsageError("dimensional mode needs all of --kappa, --beta, --a")
    if args.reduced:
        raise UsageError("--reduced applies to --x mode only")
    try:
        params = PlasmaParameters.from_kappa(args.beta, args.kappa)
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    if args.a < 0.0:
        raise UsageError("--a must be >= 0")
    return False, params, args.a


def reduced_row(x, spec):
    """All sweep columns at one reduced gap, keyed by CSV column name."""
    k = thermo.reduced_kernels(x, spec)
    return {
        "x": float(x),
        "I_f": k.I_f,
        "I_L": k.I_L,
        "I_U": k.I_U,
        "f_red": -k.I_f / (2.0 * math.pi),
        "F_red": -k.I_L / (4.0 * math.pi),
        "U_red": -k.I_U / (2.0 * math.pi),
        "S_red": x * k.I_f / (4.0 * math.pi) if x > 0.0 else 0.0,
        "dU_surface_red": -surface.surface_delta_kernel(x, spec) / (4.0 * math.pi),
    }


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(lines))


def cmd_quantity(args, which):
    spec = _spec(args)
    reduced, params, gap = _resolve_mode(args)
    geom = make_geometry(params, gap)
    x = geom.x
    k = thermo.reduced_kernels(x, spec)
    if reduced:
        inputs = {"x": x}
    else:
        inputs = {"kappa": params.kappa, "beta": params.beta, "a": geom.a, "x": x}
    values = {}
    lines = [f"x = {x:.10g}"]
    if which == "force":
        lines.append(f"I_f = {k.I_f:.10g}")
        values["f_reduced"] = -k.I_f / (2.0 * math.pi)
        lines.append(f"f_reduced = f*beta/kappa^3 = {values['f_reduced']:.10g}")
        if not reduced:
            values["f"] = thermo.casimir_force(params, geom, spec)
            values["f_asymptotic"] = thermo.asymptotic_force(params, geom)
            lines.append(f"f = {values['f']:.10g} dyne/cm^2")
            lines.append(f"large-gap asymptote = {values['f_asymptotic']:.10g} dyne/cm^2")
    elif which == "energy":
        lines.append(f"I_L = {k.I_L:.10g}")
        lines.append(f"I_U = {k.I_U:.10g}")
        values["F_reduced"] = -k.I_L / (4.0 * math.pi)
        values["U_reduced"] = -k.I_U / (2.0 * math.pi)
        lines.append(f"F_reduced = beta*F_c/kappa^2 = {values['F_reduced']:.10g}")
        lines.append(f"U_reduced = beta*U_c/kappa^2 = {values['U_reduced']:.10g}")
        if not reduced:
            values["F_c"] = thermo.casimir_free_energy(params, geom, spec)
            values["U_c"] = thermo.casimir_internal_energy(params, geom, spec)
            lines.append(f"F_c = {values['F_c']:.10g} erg/cm^2")
            lines.append(f"U_c = {values['U_c']:.10g} erg/cm^2")
    else:
        lines.append(f"I_f = {k.I_f:.10g}")
        values["S_reduced"] = x * k.I_f / (4.0 * math.pi) if x > 0.0 else 0.0
        lines.append(f"S_reduced = S_c/(k_B kappa^2) = {values['S_reduced']:.10g}")
        if not reduced:
            values["S_c"] = thermo.casimir_entropy(params, geom, spec)
            lines.append(f"S_c = {values['S_c']:.10g} erg/K/cm^2")
    payload = {
        "inputs": inputs,
        "reduced_kernels": {"I_f": k.I_f, "I_L": k.I_L, "I_U": k.I_U},
        "values": values,
        "quadrature": {"rel_tol": spec.rel_tol, "error_estimate": k.error_estimate},
    }
    _emit(args, payload, lines)
    return 0


def cmd_surface(args):
    spec = _spec(args)
    reduced, params, gap = _resolve_mode(args)
    if not args.d > 0.0:
        raise UsageError("--d must be > 0")
    geom = make_geometry(params, gap, args.d)
    u_b = surface.bulk_internal_energy(params, geom.d)
    u_inf = surface.surface_internal_energy_infinite(params, spec)
    du = surface.surface_energy_delta(params, geom, spec)
    both, u_c, res = surface.central_equality(params, geom, spec)
    values = {"U_b": u_b, "U_inf": u_inf, "dU_a": du, "two_dU_a": both, "U_c": u_c, "residual": res}
    unit = "(units of kappa^2/beta)" if reduced else "erg/cm^2"
    lines = [f"x = {geom.x:.10g}", f"bulk U_b = {u_b:.10g} {unit}", f"one surface U_inf = {u_inf:.10g}",
             f"one surface U_a - U_inf = {du:.10g}", f"both surfaces = {both:.10g}",
             f"Casimir U_c = {u_c:.10g}", f"relative residual = {res:.3e}"]
    payload = {"inputs": {"x": geom.x, "d": geom.d}, "values": values,
               "quadrature": {"rel_tol": spec.rel_tol}}
    _emit(args, payload, lines)
    return 0


def sweep_grid(x_min, x_max, points, spacing):
    if x_min is None or x_max is None:
        raise UsageError("sweep needs --x-min and --x-max")
    if not (math.isfinite(x_min) and math.isfinite(x_max)) or x_min < 0.0 or not x_min < x_max:
        raise UsageError("need 0 <= x_min < x_max")
    if points < 2:
        raise UsageError("need --points >= 2")
    if spacing == "log":
        if x_min <= 0.0:
            raise UsageError("log spacing needs x_min > 0")
        return np.geomspace(x_min, x_max, points)
    return np.linspace(x_min, x_max, points)


def cmd_sweep(args):
    spec = _spec(args)
    grid = sweep_grid(args.x_min, args.x_max, args.points, args.spacing)
    wanted = [s.strip() for s in args.outputs.split(",") if s.strip()]
    bad = [w for w in wanted if w not in OUTPUT_COLUMNS]
    if bad or not wanted:
        raise UsageError(f"unknown outputs {bad}; choose from {', '.join(OUTPUT_COLUMNS)}")
    cols = ["x"] + [c for c in CSV_COLUMNS[1:] if c in {OUTPUT_COLUMNS[w] for w in wanted}]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        rows = list(pool.map(lambda x: reduced_row(float(x), spec), grid))
    try:
        fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([format(r[c], ".17g") for c in cols])
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.json and args.out != "-":
        print(json.dumps({"path": args.out, "rows": len(rows), "columns": cols}))
    return 0


def cmd_verify(args):
    results = run_checks(rel_tol_override=args.rel_tol)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "checks": [r.as_dict() for r in results]}, indent=2))
    else:
        print(format_table(results))
    return 0 if ok else 1


def cmd_cutoff(args):
    try:
        tc = cutoff.cutoff_distance(args.epsilon_minus_1, args.sigma)
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    tau = tc / cutoff.C_LIGHT
    values = {"tau_c_cm": tc, "tau_c_angstrom": tc / cutoff.ANGSTROM, "tau_s": tau}
    lines = [f"tau*c = {tc:.6g} cm = {tc / cutoff.ANGSTROM:.4g} Angstrom", f"tau = {tau:.4g} s"]
    payload = {"inputs": {"epsilon_minus_1": args.epsilon_minus_1, "sigma": args.sigma}, "values": values}
    _emit(args, payload, lines)
    return 0


def main(argv=None) -> int:
    parser, args = parse_args(argv)
    try:
        if args.command in ("force", "energy", "entropy"):
            return cmd_quantity(args, args.command)
        if args.command == "surface":
            return cmd_surface(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "cutoff":
            return cmd_cutoff(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, FloatingPointError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
