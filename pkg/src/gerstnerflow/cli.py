"""Command-line front end.

Subcommands: dispersion, surface, trajectory, invert, certify.  All numeric
output uses 17-significant-digit decimals so emitted CSV/JSON is bit-stable
across runs and round-trips through a parser unchanged.

Exit codes: 0 success (certify: pass), 1 certification failure,
2 configuration or domain error, 3 I/O error, 4 out-of-domain query.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .certify import (
    InversionResult,
    LabelGrid,
    OutOfDomainError,
    invert_map,
    run_certificates,
)
from .constants import PhysicalConstants
from .model import LabelPoint, PhysicalPoint, WaveField, dispersion_speed
from .surface import ConvergenceError, SurfaceSolverConfig, solve_r0_of_s, surface_point


def fmt(x) -> str:
    """17-significant-digit decimal; round-trips float64 exactly."""
    return format(float(x), ".17g")


def to_json(obj, indent: int = 0) -> str:
    """Minimal JSON emitter preserving key order and fmt() float rendering."""
    pad = "  " * indent
    if isinstance(obj, dict):
        items = ",\n".join(
            f'{pad}  "{key}": {to_json(val, indent + 1)}'
            for key, val in obj.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v, indent) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "Infinity" if obj > 0 else "-Infinity"
        if math.isnan(obj):
            return "NaN"
        return fmt(obj)
    return '"' + str(obj) + '"'


def _add_constants_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--omega", type=float, default=7.3e-5,
                   help="rotational speed, rad/s")
    p.add_argument("--g", type=float, default=9.8,
                   help="gravitational acceleration, m/s^2")
    p.add_argument("--earth-radius", type=float, default=6.378e6,
                   help="Earth radius, m")
    p.add_argument("--beta", type=float, default=None,
                   help="beta-plane parameter, 1/(m s); default 2*omega/R")


def _constants(args) -> PhysicalConstants:
    return PhysicalConstants(omega=args.omega, g=args.g,
                             R=args.earth_radius, beta=args.beta)


def _wave(args) -> WaveField:
    constants = _constants(args)
    wave = WaveField.build(args.k, args.r0, constants)
    if getattr(args, "c_override", None) is not None:
        wave = WaveField(constants=constants, k=wave.k, c=args.c_override,
                         r0=wave.r0, L=wave.L)
    return wave


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _rows_to_text(columns, rows, out_format: str) -> str:
    if out_format == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(fmt(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    return to_json([dict(zip(columns, row)) for row in rows]) + "\n"


def cmd_dispersion(args) -> int:
    c = dispersion_speed(args.k, _constants(args))
    sys.stdout.write(f"c_m_per_s={fmt(c)}\n")
    sys.stdout.write(f"L_m={fmt(2.0 * math.pi / args.k)}\n")
    return 0


def cmd_surface(args) -> int:
    wave = _wave(args)
    cfg = SurfaceSolverConfig(tol=args.tol)
    grid = LabelGrid.default(wave)
    s_max = grid.s_max if args.s_max is None else args.s_max
    s_vals = np.linspace(-s_max, s_max, args.s_count)
    q_vals = np.linspace(0.0, wave.L, args.q_count)
    rows = []
    for s in s_vals:
        for q in q_vals:
            smp = surface_point(float(q), float(s), args.t, wave, cfg)
            rows.append((smp.t, smp.s, smp.q, smp.x, smp.y, smp.z, smp.r0s))
    _emit(_rows_to_text(["t", "s", "q", "x", "y", "z", "r0s"], rows,
                        args.format), args.out)
    return 0


def cmd_trajectory(args) -> int:
    wave = _wave(args)
    r0s = solve_r0_of_s(args.s, wave)
    if args.r > r0s:
        raise ValueError(
            f"label r={args.r} lies above the surface label r0(s)={r0s}")
    T = wave.period()
    times = np.linspace(args.t0, args.t0 + args.periods * T, args.samples)
    rows = []
    from .model import flow_map
    for t in times:
        p = flow_map(LabelPoint(q=args.q, r=args.r, s=args.s), float(t), wave)
        rows.append((float(t), float(p.x), float(p.y), float(p.z),
                     args.q, args.r, args.s))
    _emit(_rows_to_text(["t", "x", "y", "z", "q", "r", "s"], rows,
                        args.format), args.out)
    return 0


def cmd_invert(args) -> int:
    wave = _wave(args)
    result: InversionResult = invert_map(
        PhysicalPoint(x=args.x, y=args.y, z=args.z), args.t, wave,
        tol=args.tol, max_iter=args.max_iter)
    payload = {
        "q": result.label.q,
        "r": result.label.r,
        "s": result.label.s,
        "iterations": result.iterations,
        "residual_m": result.residual_m,
    }
    _emit(to_json(payload) + "\n", args.out)
    return 0


def _parse_grid(spec: str):
    try:
        nq, nr, ns = (int(v) for v in spec.lower().split("x"))
    except ValueError as exc:
        raise ValueError(f"bad grid spec {spec!r}; expected NQxNRxNS") from exc
    return nq, nr, ns


def cmd_certify(args) -> int:
    wave = _wave(args)
    nq, nr, ns = _parse_grid(args.grid)
    base = LabelGrid.default(wave, q_count=nq, r_count=nr, s_count=ns)
    grid = LabelGrid(
        q_count=nq, r_count=nr, s_count=ns,
        r_min=base.r_min if args.r_min is None else args.r_min,
        s_max=base.s_max if args.s_max is None else args.s_max)
    report = run_certificates(
        wave, grid, seed=args.seed, pair_count=args.pairs,
        inversion_samples=args.inversion_samples, fd_step=args.fd_step,
        rho=args.rho, cfg=SurfaceSolverConfig(tol=args.tol))
    payload = {
        "grid": report.grid,
        "min_jacobian_det": report.min_jacobian_det,
        "max_fd_jacobian_error": report.max_fd_jacobian_error,
        "contraction_constant_operator": report.contraction_constant_operator,
        "contraction_constant_paper": report.contraction_constant_paper,
        "min_pair_ratio": report.min_pair_ratio,
        "max_inversion_roundtrip_error": report.max_inversion_roundtrip_error,
        "max_det_time_variation": report.max_det_time_variation,
        "max_gradient_asymmetry": report.max_gradient_asymmetry,
        "max_kinematic_bc_error": report.max_kinematic_bc_error,
        "boundary_checks_passed": report.boundary_checks_passed,
        "pass": report.passed,
    }
    _emit(to_json(payload) + "\n", args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gerstnerflow",
        description="Equatorially trapped wave kernel and diffeomorphism "
                    "certifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dispersion", help="phase speed and wavelength from k")
    p.add_argument("--k", type=float, required=True, help="wave number, 1/m")
    _add_constants_flags(p)
    p.set_defaults(func=cmd_dispersion)

    p = sub.add_parser("surface", help="sample the free surface to CSV/JSON")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--s-max", type=float, default=None)
    p.add_argument("--s-count", type=int, default=5)
    p.add_argument("--q-count", type=int, default=65)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    _add_constants_flags(p)
    p.set_defaults(func=cmd_surface, c_override=None)

    p = sub.add_parser("trajectory", help="particle trajectory to CSV/JSON")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--periods", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    _add_constants_flags(p)
    p.set_defaults(func=cmd_trajectory, c_override=None)

    p = sub.add_parser("invert", help="recover the label of a physical point")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int, default=100_000)
    p.add_argument("--out", default=None)
    _add_constants_flags(p)
    p.set_defaults(func=cmd_invert, c_override=None)

    p = sub.add_parser("certify", help="run the full certification sweep")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--grid", default="24x12x13", help="NQxNRxNS")
    p.add_argument("--r-min", type=float, default=None)
    p.add_argument("--s-max", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=100_000)
    p.add_argument("--inversion-samples", type=int, default=2000)
    p.add_argument("--fd-step", type=float, default=0.005)
    p.add_argument("--rho", type=float, default=1000.0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--c-override", type=float, default=None,
                   help="force a phase speed (negative-control experiments)")
    p.add_argument("--out", default=None)
    _add_constants_flags(p)
    p.set_defaults(func=cmd_certify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OutOfDomainError as exc:
        sys.stderr.write(f"error: above free surface: {exc}\n")
        return 4
    except (ValueError, ConvergenceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
