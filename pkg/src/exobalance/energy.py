"""Potential energy of the linkage at a configuration.

Both springs are zero-free-length, so each stores (1/2) k s^2 for its
current endpoint distance s. Under the fixed architecture ratios the
gravitational and elastic energies reduce to closed forms in sin(q1) and
sin(q1 + q2) only:

    V_G = g * ( m1 (l1/2) sin q1
              + m2 (l1 sin q1 + (l2/2) sin(q1+q2))
              + m3 l1 ((5/6) sin q1 + (1/3) sin(q1+q2))
              + m4 l1 ((2/3) sin q1 + (1/6) sin(q1+q2))
              + m5 ((l1/3) sin q1 + l5/2)
              + m6 ((l1/2) sin q1 + l5) )

    V_S = (1/2) k1 l1^2 (20/81 - (16/81) sin q1)
        + (1/2) k2 (l5^2 + ls^2 - 2 l5 ls sin(q1+q2))

Everything here is a pure function of immutable inputs, double precision
throughout, with no iteration or tunable tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Configuration, ExoModel


@dataclass(frozen=True)
class EnergyBreakdown:
    """Gravitational, elastic, and total potential energy in joules."""

    v_g: float
    v_s: float
    v_total: float


@dataclass(frozen=True)
class SpringLengths:
    """Current endpoint distances of the two springs in meters."""

    s1: float
    s2: float


def _check_angles(q: Configuration) -> None:
    if not (math.isfinite(q.q1) and math.isfinite(q.q2)):
        raise ValueError(f"joint angles must be finite, got q1={q.q1!r}, q2={q.q2!r}")


def gravitational_pe(model: ExoModel, q: Configuration) -> float:
    """Gravitational potential energy V_G [J] at configuration q."""
    _check_angles(q)
    a = model.arch
    m = model.masses
    s1 = math.sin(q.q1)
    s12 = math.sin(q.q1 + q.q2)
    return model.g * (
        m.m1 * (a.l1 / 2.0) * s1
        + m.m2 * (a.l1 * s1 + (a.l2 / 2.0) * s12)
        + m.m3 * a.l1 * ((5.0 / 6.0) * s1 + (1.0 / 3.0) * s12)
        + m.m4 * a.l1 * ((2.0 / 3.0) * s1 + (1.0 / 6.0) * s12)
        + m.m5 * ((a.l1 / 3.0) * s1 + a.l5 / 2.0)
        + m.m6 * ((a.l1 / 2.0) * s1 + a.l5)
    )


def elastic_pe(model: ExoModel, q: Configuration) -> float:
    """Elastic potential energy V_S [J] of both springs at configuration q."""
    _check_angles(q)
    a = model.arch
    k = model.springs
    s1 = math.sin(q.q1)
    s12 = math.sin(q.q1 + q.q2)
    term1 = 0.5 * k.k1 * a.l1**2 * (20.0 / 81.0 - (16.0 / 81.0) * s1)
    term2 = 0.5 * k.k2 * (a.l5**2 + a.ls**2 - 2.0 * a.l5 * a.ls * s12)
    return term1 + term2


def total_pe(model: ExoModel, q: Configuration) -> EnergyBreakdown:
    """Total potential energy at q; v_total is exactly v_g + v_s."""
    v_g = gravitational_pe(model, q)
    v_s = elastic_pe(model, q)
    return EnergyBreakdown(v_g=v_g, v_s=v_s, v_total=v_g + v_s)


def predicted_constant_V(model: ExoModel) -> float:
    """The configuration-independent total energy [J] of a balanced model.

    Collecting the constant terms of V_G + V_S gives

        V = g l5 (m5/2 + m6) + (10/81) k1 l1^2 + (1/2) k2 (l5^2 + ls^2)

    which equals total_pe everywhere once the springs satisfy the balance
    conditions. Meaningless (just the constant part) for unbalanced springs.
    """
    a = model.arch
    m = model.masses
    k = model.springs
    return (
        model.g * a.l5 * (m.m5 / 2.0 + m.m6)
        + (10.0 / 81.0) * k.k1 * a.l1**2
        + 0.5 * k.k2 * (a.l5**2 + a.ls**2)
    )


def spring_lengths(model: ExoModel, q: Configuration) -> SpringLengths:
    """Endpoint distances of both springs at configuration q.

    Law-of-cosines forms; the radicands are clamped at zero because exact
    alignment can round to something like -1e-17.
    """
    _check_angles(q)
    a = model.arch
    r1 = a.b1**2 + a.b2**2 - 2.0 * a.b1 * a.b2 * math.sin(q.q1)
    r2 = a.l5**2 + a.ls**2 - 2.0 * a.l5 * a.ls * math.sin(q.q1 + q.q2)
    return SpringLengths(s1=math.sqrt(max(r1, 0.0)), s2=math.sqrt(max(r2, 0.0)))


def serial_chain_pe(model: ExoModel, q: Configuration) -> float:
    """Independent forward-kinematics cross-check for links 1 and 2 [J].

    Sums m*g*y over the center-of-mass heights of the serial chain:
    y1 = (l1/2) sin q1 and y2 = l1 sin q1 + (l2/2) sin(q1+q2). The COM
    geometry of links 3-6 cannot be reconstructed unambiguously, so this
    oracle deliberately covers only the two serial links.
    """
    _check_angles(q)
    a = model.arch
    m = model.masses
    y1 = (a.l1 / 2.0) * math.sin(q.q1)
    y2 = a.l1 * math.sin(q.q1) + (a.l2 / 2.0) * math.sin(q.q1 + q.q2)
    return model.g * (m.m1 * y1 + m.m2 * y2)
