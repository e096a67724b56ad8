"""Spring sizing and numerical verification of gravity balance.

The total potential energy only contains the basis {1, sin q1, sin(q1+q2)}.
Balance means the two varying coefficients vanish, which pins down both
stiffnesses in closed form:

    gravity coefficient of sin q1:
        G1 = l1 g (m1/2 + m2 + (5/6) m3 + (2/3) m4 + (1/3) m5 + (1/2) m6)
    spring coefficient of sin q1:  -(8/81) k1 l1^2
        =>  k1 = 81 G1 / (8 l1^2)

    gravity coefficient of sin(q1+q2):
        G2 = m2 g l2/2 + m3 g l1/3 + m4 g l1/6
    spring coefficient of sin(q1+q2):  -k2 l5 ls
        =>  k2 = G2 / (l5 ls)

Each condition is linear in one unknown, so no iteration is involved; the
solver still reports substitution residuals as a safety net. The rest of
the module verifies balance numerically: a least-squares fit onto the
three-function basis (the varying coefficients of a balanced model must
come out zero), a central-difference generalized torque (zero everywhere
for a balanced model), and a grid summary with a balanced/unbalanced
verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import (
    ArchParams,
    Configuration,
    ExoModel,
    MassSet,
    SpringPair,
    STANDARD_GRAVITY,
    derive_architecture,
    shooting_range_axes,
)
from .energy import total_pe

# A relative energy spread below this is indistinguishable from double
# precision round-off accumulated over ~1e4 grid points.
SPREAD_TOL = 1e-9

# Central-difference step [rad]: balances h^2 truncation against eps/h
# cancellation for O(10 J) energies.
DEFAULT_FD_STEP = 1e-5


@dataclass(frozen=True)
class BalanceSolution:
    """Solved stiffnesses plus substitution residuals [J] of both conditions."""

    springs: SpringPair
    residual1: float
    residual2: float


@dataclass(frozen=True)
class BasisFit:
    """Least-squares coefficients of V(q) = c0 + c1 sin q1 + c12 sin(q1+q2)."""

    c0: float
    c1: float
    c12: float
    max_fit_residual: float


@dataclass(frozen=True)
class BalanceReport:
    """Grid summary of total energy constancy plus the fitted basis."""

    grid_n: int
    v_min: float
    v_max: float
    v_mean: float
    relative_spread: float
    fit: BasisFit
    max_torque: float
    balanced: bool


def solve_spring_constants(masses: MassSet, arch: ArchParams, g: float) -> BalanceSolution:
    """Solve both balance conditions for the spring stiffnesses.

    Raises ValueError when an attachment length that ends up in a
    denominator (l1, l5, ls) is not positive.
    """
    if arch.l1 <= 0.0 or arch.l5 <= 0.0 or arch.ls <= 0.0:
        raise ValueError(
            f"attachment lengths must be positive to solve for stiffnesses, "
            f"got l1={arch.l1!r}, l5={arch.l5!r}, ls={arch.ls!r}"
        )
    grav1 = arch.l1 * g * (
        masses.m1 / 2.0
        + masses.m2
        + (5.0 / 6.0) * masses.m3
        + (2.0 / 3.0) * masses.m4
        + masses.m5 / 3.0
        + masses.m6 / 2.0
    )
    grav2 = g * (
        masses.m2 * arch.l2 / 2.0
        + masses.m3 * arch.l1 / 3.0
        + masses.m4 * arch.l1 / 6.0
    )
    k1 = 81.0 * grav1 / (8.0 * arch.l1**2)
    k2 = grav2 / (arch.l5 * arch.ls)
    residual1 = grav1 - (8.0 / 81.0) * k1 * arch.l1**2
    residual2 = grav2 - k2 * arch.l5 * arch.ls
    return BalanceSolution(springs=SpringPair(k1=k1, k2=k2), residual1=residual1, residual2=residual2)


def balanced_model(masses: MassSet, l1: float, g: float = STANDARD_GRAVITY) -> ExoModel:
    """Convenience: derive the architecture from l1 and size both springs."""
    arch = derive_architecture(l1)
    solution = solve_spring_constants(masses, arch, g)
    return ExoModel(arch=arch, masses=masses, springs=solution.springs, g=g)


def fit_energy_basis(samples: Sequence[tuple[Configuration, float]]) -> BasisFit:
    """Fit sampled energies onto the basis {1, sin q1, sin(q1+q2)}.

    The true energy lies exactly in this basis, so the fit residual of any
    energy produced by this library is pure round-off; a materially nonzero
    c1 or c12 is the signature of imbalance. Needs at least 3 samples whose
    design matrix has full column rank, otherwise raises ValueError.
    """
    if len(samples) < 3:
        raise ValueError(f"basis fit needs at least 3 samples, got {len(samples)}")
    design = np.array(
        [[1.0, math.sin(q.q1), math.sin(q.q1 + q.q2)] for q, _ in samples]
    )
    values = np.array([v for _, v in samples])
    coef, _, rank, _ = np.linalg.lstsq(design, values, rcond=None)
    if rank < 3:
        raise ValueError(
            "degenerate samples: the {1, sin q1, sin(q1+q2)} design matrix "
            f"has rank {rank} < 3"
        )
    max_resid = float(np.max(np.abs(design @ coef - values)))
    return BasisFit(
        c0=float(coef[0]),
        c1=float(coef[1]),
        c12=float(coef[2]),
        max_fit_residual=max_resid,
    )


def gravity_torque(
    model: ExoModel, q: Configuration, h: float = DEFAULT_FD_STEP
) -> tuple[float, float]:
    """Central-difference generalized torque (dV/dq1, dV/dq2) [J/rad].

    For a balanced model both components measure only truncation and
    round-off, so they are O(h^2)-small. Raises ValueError for h <= 0.
    """
    if not (h > 0.0):
        raise ValueError(f"finite-difference step must be positive, got {h!r}")
    t1 = (
        total_pe(model, Configuration(q.q1 + h, q.q2)).v_total
        - total_pe(model, Configuration(q.q1 - h, q.q2)).v_total
    ) / (2.0 * h)
    t2 = (
        total_pe(model, Configuration(q.q1, q.q2 + h)).v_total
        - total_pe(model, Configuration(q.q1, q.q2 - h)).v_total
    ) / (2.0 * h)
    return t1, t2


def check_balance(model: ExoModel, grid_n: int = 101) -> BalanceReport:
    """Evaluate energy constancy over a grid_n x grid_n configuration grid.

    The grid spans q1 in [-pi/2, pi/2] and q2 in [0, pi] inclusively. The
    verdict is balanced iff the relative spread (max-min)/max(1, |mean|)
    stays below SPREAD_TOL. The mean uses compensated summation so the
    report is deterministic regardless of evaluation order; max_torque is
    the largest torque-component magnitude seen on the grid.
    """
    q1s, q2s = shooting_range_axes(grid_n, grid_n)
    samples: list[tuple[Configuration, float]] = []
    totals: list[float] = []
    max_torque = 0.0
    for q1 in q1s:
        for q2 in q2s:
            q = Configuration(float(q1), float(q2))
            totals.append(total_pe(model, q).v_total)
            samples.append((q, totals[-1]))
            t1, t2 = gravity_torque(model, q)
            max_torque = max(max_torque, abs(t1), abs(t2))
    v_min = min(totals)
    v_max = max(totals)
    v_mean = math.fsum(totals) / len(totals)
    spread = (v_max - v_min) / max(1.0, abs(v_mean))
    return BalanceReport(
        grid_n=grid_n,
        v_min=v_min,
        v_max=v_max,
        v_mean=v_mean,
        relative_spread=spread,
        fit=fit_energy_basis(samples),
        max_torque=max_torque,
        balanced=spread < SPREAD_TOL,
    )
