"""Simulation datasets: energy grids, the throw trajectory, the mass study.

Rows are plain frozen dataclasses emitted in deterministic order (row-major
in q1 then q2 for grids, ascending t or arm mass otherwise) so repeated
runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .model import ArchParams, Configuration, ExoModel, MassSet, shooting_range_axes
from .energy import EnergyBreakdown, predicted_constant_V, total_pe
from .balance import gravity_torque, solve_spring_constants


@dataclass(frozen=True)
class GridSample:
    """One grid configuration with its energy breakdown [rad, J]."""

    q1: float
    q2: float
    v_g: float
    v_s: float
    v_total: float


@dataclass(frozen=True)
class TrajectoryPoint:
    """One point of the throw motion: phase t in [0, 1], angles, energies, torque."""

    t: float
    q: Configuration
    energies: EnergyBreakdown
    torque: tuple[float, float]


@dataclass(frozen=True)
class MassStudyRow:
    """Spring sizing for one value of added arm mass."""

    added_arm_mass: float
    m1_eff: float
    m2_eff: float
    k1: float
    k2: float
    constant_V: float


def sweep_grid(model: ExoModel, n1: int, n2: int) -> list[GridSample]:
    """Energies on the inclusive n1 x n2 grid over the throw range of motion.

    Row-major in q1 then q2: q1 is the slow index. Raises ValueError for
    counts below 2.
    """
    q1s, q2s = shooting_range_axes(n1, n2)
    samples = []
    for q1 in q1s:
        for q2 in q2s:
            e = total_pe(model, Configuration(float(q1), float(q2)))
            samples.append(
                GridSample(q1=float(q1), q2=float(q2), v_g=e.v_g, v_s=e.v_s, v_total=e.v_total)
            )
    return samples


def shooting_trajectory(model: ExoModel, n: int) -> list[TrajectoryPoint]:
    """The overhead-throw motion sampled at n phases uniform on [0, 1].

    Profile: the shoulder rises linearly, q1(t) = -pi/2 + pi*t, while the
    elbow bends to 90 degrees at mid-motion and back, q2(t) = (pi/2) sin(pi*t).
    Each point carries the energy breakdown and the finite-difference torque.
    """
    if n < 2:
        raise ValueError(f"trajectory needs at least 2 points, got {n}")
    points = []
    for t in np.linspace(0.0, 1.0, n):
        q = Configuration(
            q1=-math.pi / 2.0 + math.pi * float(t),
            q2=(math.pi / 2.0) * math.sin(math.pi * float(t)),
        )
        points.append(
            TrajectoryPoint(
                t=float(t),
                q=q,
                energies=total_pe(model, q),
                torque=gravity_torque(model, q),
            )
        )
    return points


def mass_study(
    structural_masses: MassSet,
    arch: ArchParams,
    g: float,
    arm_mass_min: float,
    arm_mass_max: float,
    n: int,
    upper_fraction: float = 0.5,
) -> list[MassStudyRow]:
    """Re-solve the springs for n uniformly spaced added arm masses.

    Each added mass D is split onto the two arm-bearing links:
    m1_eff = m1 + upper_fraction * D and m2_eff = m2 + (1 - upper_fraction) * D.
    Both stiffness columns are affine in D by construction. Raises
    ValueError for an invalid range, count, or fraction.
    """
    if not (0.0 <= arm_mass_min <= arm_mass_max):
        raise ValueError(
            f"need 0 <= arm_mass_min <= arm_mass_max, got [{arm_mass_min!r}, {arm_mass_max!r}]"
        )
    if n < 2:
        raise ValueError(f"mass study needs at least 2 rows, got {n}")
    if not (0.0 <= upper_fraction <= 1.0):
        raise ValueError(f"upper_fraction must lie in [0, 1], got {upper_fraction!r}")

    rows = []
    for delta in np.linspace(arm_mass_min, arm_mass_max, n):
        eff = replace(
            structural_masses,
            m1=structural_masses.m1 + upper_fraction * float(delta),
            m2=structural_masses.m2 + (1.0 - upper_fraction) * float(delta),
        )
        solution = solve_spring_constants(eff, arch, g)
        model = ExoModel(arch=arch, masses=eff, springs=solution.springs, g=g)
        rows.append(
            MassStudyRow(
                added_arm_mass=float(delta),
                m1_eff=eff.m1,
                m2_eff=eff.m2,
                k1=solution.springs.k1,
                k2=solution.springs.k2,
                constant_V=predicted_constant_V(model),
            )
        )
    return rows
