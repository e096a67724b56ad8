"""Mechanism parameters for the six-link, two-spring arm-support linkage.

The linkage is a planar two-degree-of-freedom mechanism: q1 drives the
shoulder link, q2 the elbow, and the remaining four links form constrained
sub-chains that keep the spring geometry closed. Its whole architecture is
fixed by a single length scale (the shoulder link length l1) through a set
of ratios; the energy and balance formulas in the sibling modules are valid
only under those ratios, so l1 is the one free length parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Default gravitational acceleration [m/s^2]; overridable per model.
STANDARD_GRAVITY = 9.81

# Relative tolerance for checking the architecture ratios.
RATIO_RTOL = 1e-12

# Joint-angle ranges covered by the overhead-throw motion (a simulation
# convention, not a hard bound on the energy formulas).
SHOOTING_Q1_RANGE = (-math.pi / 2, math.pi / 2)
SHOOTING_Q2_RANGE = (0.0, math.pi)


@dataclass(frozen=True)
class ArchParams:
    """Link lengths and spring attachment distances, all in meters.

    b1 and b2 locate the two endpoints of spring 1 around the shoulder
    joint; ls is the attachment distance of spring 2 along link 2; lt is
    the attachment distance of link 5's joint along link 6 (kept for
    completeness, it does not enter any energy term).
    """

    l1: float
    l2: float
    l3: float
    l4: float
    l5: float
    l6: float
    b1: float
    b2: float
    ls: float
    lt: float


@dataclass(frozen=True)
class MassSet:
    """Masses of the six links in kilograms.

    The wearer's arm is modeled by augmenting m1 (upper arm) and m2
    (forearm) rather than as a separate body.
    """

    m1: float = 0.0
    m2: float = 0.0
    m3: float = 0.0
    m4: float = 0.0
    m5: float = 0.0
    m6: float = 0.0


@dataclass(frozen=True)
class SpringPair:
    """Stiffness coefficients of the two balancing springs [N/m]."""

    k1: float = 0.0
    k2: float = 0.0


@dataclass(frozen=True)
class ExoModel:
    """Complete mechanism: architecture, masses, springs, gravity."""

    arch: ArchParams
    masses: MassSet
    springs: SpringPair
    g: float = STANDARD_GRAVITY


@dataclass(frozen=True)
class Configuration:
    """Joint angles in radians: q1 shoulder, q2 elbow."""

    q1: float
    q2: float


def derive_architecture(l1: float) -> ArchParams:
    """Derive the full architecture from the shoulder link length l1.

    The fixed ratios are:

        l2 = 0.9 l1          l5 = l6 = l1        l3 = l4 = l1/3
        b1 = (4/9) l1        b2 = (2/9) l1       lt = l1/3
        ls = (35/36) l2

    Raises ValueError for non-positive or non-finite l1.
    """
    if not math.isfinite(l1) or l1 <= 0.0:
        raise ValueError(f"link length l1 must be positive and finite, got {l1!r}")
    l2 = 0.9 * l1
    return ArchParams(
        l1=l1,
        l2=l2,
        l3=l1 / 3.0,
        l4=l1 / 3.0,
        l5=l1,
        l6=l1,
        b1=(4.0 / 9.0) * l1,
        b2=(2.0 / 9.0) * l1,
        ls=(35.0 / 36.0) * l2,
        lt=l1 / 3.0,
    )


def validate_model(model: ExoModel) -> list[str]:
    """Check every model invariant; return the list of violations.

    An empty list means the model is valid. Checks, in order: the
    architecture ratios (each derived length against its l1-derived value,
    relative tolerance RATIO_RTOL), non-negative finite masses, non-negative
    finite spring stiffnesses, and positive finite g.
    """
    violations: list[str] = []

    arch = model.arch
    if not math.isfinite(arch.l1) or arch.l1 <= 0.0:
        violations.append(f"l1 must be positive and finite, got {arch.l1!r}")
    else:
        expected = derive_architecture(arch.l1)
        for name in ("l2", "l3", "l4", "l5", "l6", "b1", "b2", "ls", "lt"):
            have = getattr(arch, name)
            want = getattr(expected, name)
            if not math.isclose(have, want, rel_tol=RATIO_RTOL, abs_tol=0.0):
                violations.append(
                    f"{name} violates the architecture ratio: "
                    f"expected {want!r} for l1={arch.l1!r}, got {have!r}"
                )

    for i in range(1, 7):
        m = getattr(model.masses, f"m{i}")
        if not math.isfinite(m) or m < 0.0:
            violations.append(f"m{i} must be non-negative and finite, got {m!r}")

    for name in ("k1", "k2"):
        k = getattr(model.springs, name)
        if not math.isfinite(k) or k < 0.0:
            violations.append(f"{name} must be non-negative and finite, got {k!r}")

    if not math.isfinite(model.g) or model.g <= 0.0:
        violations.append(f"g must be positive and finite, got {model.g!r}")

    return violations


def shooting_range_axes(n1: int, n2: int) -> tuple[np.ndarray, np.ndarray]:
    """Uniform inclusive grid axes over the throw range of motion.

    Returns (q1 values, q2 values) with n1 points on [-pi/2, pi/2] and n2
    points on [0, pi]. The arithmetic guarantees that every point of an
    n-point axis reappears bit-identically on the (2n-1)-point refinement.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError(f"grid needs at least 2 points per axis, got {n1}x{n2}")
    q1s = np.linspace(SHOOTING_Q1_RANGE[0], SHOOTING_Q1_RANGE[1], n1)
    q2s = np.linspace(SHOOTING_Q2_RANGE[0], SHOOTING_Q2_RANGE[1], n2)
    return q1s, q2s
