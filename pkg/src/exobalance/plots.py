"""Static figure emission for the three dataset kinds.

Figures are written as self-contained vector files (pick the format by the
path suffix, .svg or .pdf both work); nothing interactive is created.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .sweep import GridSample, MassStudyRow, TrajectoryPoint
from .tables import _infer_kind


def plot_grid(samples: Sequence[GridSample], path: str | Path) -> None:
    """Heatmap of total potential energy over the (q1, q2) grid."""
    if not samples:
        raise ValueError("cannot plot an empty grid dataset")
    q1s = sorted({s.q1 for s in samples})
    q2s = sorted({s.q2 for s in samples})
    v = np.array([s.v_total for s in samples]).reshape(len(q1s), len(q2s))

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    mesh = ax.pcolormesh(q1s, q2s, v.T, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="total potential energy [J]")
    ax.set_xlabel("shoulder angle q1 [rad]")
    ax.set_ylabel("elbow angle q2 [rad]")
    ax.set_title(f"V_total: min {v.min():.9g} J, max {v.max():.9g} J")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_trajectory(points: Sequence[TrajectoryPoint], path: str | Path) -> None:
    """Gravitational, elastic, and total energy along the throw motion."""
    if not points:
        raise ValueError("cannot plot an empty trajectory dataset")
    t = [p.t for p in points]

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(t, [p.energies.v_g for p in points], label="gravitational")
    ax.plot(t, [p.energies.v_s for p in points], label="elastic")
    ax.plot(t, [p.energies.v_total for p in points], label="total", linewidth=2.0, color="black")
    ax.set_xlabel("motion phase t [-]")
    ax.set_ylabel("potential energy [J]")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_study(rows: Sequence[MassStudyRow], path: str | Path) -> None:
    """Both spring stiffnesses versus added arm mass (twin y axes)."""
    if not rows:
        raise ValueError("cannot plot an empty study dataset")
    mass = [r.added_arm_mass for r in rows]

    fig, ax1 = plt.subplots(figsize=(6.4, 4.8))
    ax2 = ax1.twinx()
    line1, = ax1.plot(mass, [r.k1 for r in rows], color="tab:blue", marker="o", label="k1")
    line2, = ax2.plot(mass, [r.k2 for r in rows], color="tab:orange", marker="s", label="k2")
    ax1.set_xlabel("added arm mass [kg]")
    ax1.set_ylabel("spring 1 stiffness k1 [N/m]", color="tab:blue")
    ax2.set_ylabel("spring 2 stiffness k2 [N/m]", color="tab:orange")
    ax1.legend(handles=[line1, line2], loc="upper left")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_plot(dataset: Sequence, path: str | Path, kind: str | None = None) -> None:
    """Render any dataset; kind in {"grid", "trajectory", "study"}."""
    if not dataset:
        raise ValueError("cannot plot an empty dataset")
    if kind is None:
        kind = _infer_kind(dataset[0])
    if kind == "grid":
        plot_grid(dataset, path)
    elif kind == "trajectory":
        plot_trajectory(dataset, path)
    elif kind == "study":
        plot_study(dataset, path)
    else:
        raise ValueError(f"unknown dataset kind {kind!r}")
