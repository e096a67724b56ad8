"""Gravity-balance analysis for a planar two-spring arm-support linkage.

The library models a six-link, two-degree-of-freedom arm exoskeleton whose
weight (plus the wearer's arm) is carried by two zero-free-length springs.
It solves the spring stiffnesses that make the total potential energy
configuration-independent, evaluates the energy anywhere, and verifies
balance numerically (grid spread, basis fit, finite-difference torque).

Typical use:

    from exobalance import MassSet, balanced_model, check_balance

    model = balanced_model(MassSet(m1=4.6, m2=1.0), l1=0.30)
    report = check_balance(model)
    assert report.balanced

The ``exobalance`` CLI wraps the same operations and writes CSV datasets
with matching SVG figures.
"""

from .model import (
    ArchParams,
    Configuration,
    ExoModel,
    MassSet,
    SpringPair,
    STANDARD_GRAVITY,
    derive_architecture,
    shooting_range_axes,
    validate_model,
)
from .energy import (
    EnergyBreakdown,
    SpringLengths,
    elastic_pe,
    gravitational_pe,
    predicted_constant_V,
    serial_chain_pe,
    spring_lengths,
    total_pe,
)
from .balance import (
    BalanceReport,
    BalanceSolution,
    BasisFit,
    balanced_model,
    check_balance,
    fit_energy_basis,
    gravity_torque,
    solve_spring_constants,
)
from .sweep import (
    GridSample,
    MassStudyRow,
    TrajectoryPoint,
    mass_study,
    shooting_trajectory,
    sweep_grid,
)
from .config import ConfigError, RunConfig, build_model, format_config, parse_config
from .tables import write_csv
from .plots import render_plot

__all__ = [
    # model
    "ArchParams", "MassSet", "SpringPair", "ExoModel", "Configuration",
    "STANDARD_GRAVITY", "derive_architecture", "validate_model", "shooting_range_axes",
    # energy
    "EnergyBreakdown", "SpringLengths", "gravitational_pe", "elastic_pe",
    "total_pe", "predicted_constant_V", "spring_lengths", "serial_chain_pe",
    # balance
    "BalanceSolution", "BasisFit", "BalanceReport", "solve_spring_constants",
    "balanced_model", "fit_energy_basis", "gravity_torque", "check_balance",
    # sweep
    "GridSample", "TrajectoryPoint", "MassStudyRow", "sweep_grid",
    "shooting_trajectory", "mass_study",
    # config / io
    "RunConfig", "ConfigError", "parse_config", "format_config", "build_model",
    "write_csv", "render_plot",
]
