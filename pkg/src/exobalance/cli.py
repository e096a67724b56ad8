"""Command-line front end.

    exobalance {solve|check|sweep|trajectory|study} --config <path> [--out <dir>]

solve prints the spring stiffnesses for the configured masses; check
verifies energy constancy on a grid and exits 0 iff balanced; the other
three write CSV datasets plus matching SVG figures to the output directory.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .model import MassSet, derive_architecture
from .energy import predicted_constant_V
from .balance import check_balance, solve_spring_constants
from .sweep import mass_study, shooting_trajectory, sweep_grid
from .config import ConfigError, RunConfig, build_model, parse_config
from .tables import write_csv
from .plots import render_plot


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exobalance",
        description="Gravity-balance analysis of a two-spring arm-support linkage.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("solve", "solve the balance conditions for both spring stiffnesses"),
        ("check", "verify energy constancy on a grid; exit 0 iff balanced"),
        ("sweep", "write the energy grid dataset (grid.csv, grid.svg)"),
        ("trajectory", "write the throw-motion dataset (trajectory.csv, trajectory.svg)"),
        ("study", "write the arm-mass study dataset (study.csv, study.svg)"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="path to the TOML run configuration")
        cmd.add_argument("--out", default=None, help="override the configured output directory")
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Dispatch a CLI invocation; returns the process exit status."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(text)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        cfg = replace(cfg, out_dir=args.out)

    command = {
        "solve": _cmd_solve,
        "check": _cmd_check,
        "sweep": _cmd_sweep,
        "trajectory": _cmd_trajectory,
        "study": _cmd_study,
    }[args.command]
    try:
        return command(cfg)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1


def _cmd_solve(cfg: RunConfig) -> int:
    arch = derive_architecture(cfg.l1)
    masses = MassSet(cfg.m1, cfg.m2, cfg.m3, cfg.m4, cfg.m5, cfg.m6)
    solution = solve_spring_constants(masses, arch, cfg.g)
    model = build_model(replace(cfg, k1=None, k2=None))
    print(f"k1 = {solution.springs.k1:.8g} N/m")
    print(f"k2 = {solution.springs.k2:.8g} N/m")
    print(f"predicted constant V = {predicted_constant_V(model):.8g} J")
    print(f"balance residuals = {solution.residual1:.6g} J, {solution.residual2:.6g} J")
    return 0


def _cmd_check(cfg: RunConfig) -> int:
    model = build_model(cfg)
    report = check_balance(model, grid_n=cfg.grid_n1)
    print(f"grid: {report.grid_n}x{report.grid_n} over q1 in [-pi/2, pi/2], q2 in [0, pi]")
    print(f"v_total min = {report.v_min:.8g} J, max = {report.v_max:.8g} J, "
          f"mean = {report.v_mean:.8g} J")
    print(f"relative spread = {report.relative_spread:.6g}")
    print(f"basis fit: c0 = {report.fit.c0:.8g} J, c1 = {report.fit.c1:.6g} J, "
          f"c12 = {report.fit.c12:.6g} J (max residual {report.fit.max_fit_residual:.6g} J)")
    print(f"max torque component = {report.max_torque:.6g} J/rad")
    print(f"verdict: {'balanced' if report.balanced else 'NOT balanced'}")
    return 0 if report.balanced else 1


def _prepare_out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cmd_sweep(cfg: RunConfig) -> int:
    samples = sweep_grid(build_model(cfg), cfg.grid_n1, cfg.grid_n2)
    out = _prepare_out_dir(cfg)
    write_csv(samples, out / "grid.csv", kind="grid")
    render_plot(samples, out / "grid.svg", kind="grid")
    totals = [s.v_total for s in samples]
    v_min, v_max = min(totals), max(totals)
    print(f"wrote {out / 'grid.csv'} and {out / 'grid.svg'} ({len(samples)} samples)")
    print(f"v_total min = {v_min:.8g} J, max = {v_max:.8g} J, "
          f"spread = {v_max - v_min:.6g} J")
    return 0


def _cmd_trajectory(cfg: RunConfig) -> int:
    points = shooting_trajectory(build_model(cfg), cfg.traj_n)
    out = _prepare_out_dir(cfg)
    write_csv(points, out / "trajectory.csv", kind="trajectory")
    render_plot(points, out / "trajectory.svg", kind="trajectory")
    totals = [p.energies.v_total for p in points]
    grav = [p.energies.v_g for p in points]
    print(f"wrote {out / 'trajectory.csv'} and {out / 'trajectory.svg'} ({len(points)} points)")
    print(f"v_g span = {max(grav) - min(grav):.8g} J, "
          f"v_total spread = {max(totals) - min(totals):.6g} J")
    return 0


def _cmd_study(cfg: RunConfig) -> int:
    arch = derive_architecture(cfg.l1)
    masses = MassSet(cfg.m1, cfg.m2, cfg.m3, cfg.m4, cfg.m5, cfg.m6)
    rows = mass_study(
        masses, arch, cfg.g, cfg.study_min, cfg.study_max, cfg.study_n, cfg.upper_fraction
    )
    out = _prepare_out_dir(cfg)
    write_csv(rows, out / "study.csv", kind="study")
    render_plot(rows, out / "study.svg", kind="study")
    print(f"wrote {out / 'study.csv'} and {out / 'study.svg'} ({len(rows)} rows)")
    print(f"k1: {rows[0].k1:.8g} -> {rows[-1].k1:.8g} N/m, "
          f"k2: {rows[0].k2:.8g} -> {rows[-1].k2:.8g} N/m")
    return 0


if __name__ == "__main__":
    sys.exit(run_cli())
