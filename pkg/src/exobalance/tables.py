"""CSV emission for the three dataset kinds.

One dialect everywhere: comma separator, dot decimal, newline-terminated
rows, UTF-8, header row first. Numbers are written with Python's
shortest round-trip representation so files are bit-stable across runs.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from .sweep import GridSample, MassStudyRow, TrajectoryPoint

GRID_COLUMNS = ("q1", "q2", "v_g", "v_s", "v_total")
TRAJECTORY_COLUMNS = ("t", "q1", "q2", "v_g", "v_s", "v_total", "dV_dq1", "dV_dq2")
STUDY_COLUMNS = ("arm_mass", "m1_eff", "m2_eff", "k1", "k2", "constant_V")


def _write_rows(path: str | Path, header: Sequence[str], rows: Sequence[Sequence[float]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(x)) for x in row])


def write_grid_csv(samples: Sequence[GridSample], path: str | Path) -> None:
    _write_rows(path, GRID_COLUMNS, [(s.q1, s.q2, s.v_g, s.v_s, s.v_total) for s in samples])


def write_trajectory_csv(points: Sequence[TrajectoryPoint], path: str | Path) -> None:
    _write_rows(
        path,
        TRAJECTORY_COLUMNS,
        [
            (p.t, p.q.q1, p.q.q2, p.energies.v_g, p.energies.v_s, p.energies.v_total,
             p.torque[0], p.torque[1])
            for p in points
        ],
    )


def write_study_csv(rows: Sequence[MassStudyRow], path: str | Path) -> None:
    _write_rows(
        path,
        STUDY_COLUMNS,
        [(r.added_arm_mass, r.m1_eff, r.m2_eff, r.k1, r.k2, r.constant_V) for r in rows],
    )


def write_csv(dataset: Sequence, path: str | Path, kind: str | None = None) -> None:
    """Write any dataset; kind in {"grid", "trajectory", "study"}.

    The kind is inferred from the first row when omitted; an empty dataset
    (header-only file) therefore needs an explicit kind.
    """
    if kind is None:
        if not dataset:
            raise ValueError("cannot infer the dataset kind of an empty dataset; pass kind=")
        kind = _infer_kind(dataset[0])
    if kind == "grid":
        write_grid_csv(dataset, path)
    elif kind == "trajectory":
        write_trajectory_csv(dataset, path)
    elif kind == "study":
        write_study_csv(dataset, path)
    else:
        raise ValueError(f"unknown dataset kind {kind!r}")


def _infer_kind(row: object) -> str:
    if isinstance(row, GridSample):
        return "grid"
    if isinstance(row, TrajectoryPoint):
        return "trajectory"
    if isinstance(row, MassStudyRow):
        return "study"
    raise ValueError(f"unrecognized dataset row type {type(row).__name__}")
