import csv

import pytest

from exobalance import derive_architecture, mass_study, shooting_trajectory, sweep_grid, write_csv
from exobalance.tables import (
    GRID_COLUMNS,
    STUDY_COLUMNS,
    TRAJECTORY_COLUMNS,
    write_grid_csv,
    write_study_csv,
    write_trajectory_csv,
)

from conftest import REF_L1, REF_MASSES


def _read(path):
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    return rows[0], rows[1:]


def test_grid_csv_round_trip(reference_model, tmp_path):
    samples = sweep_grid(reference_model, 4, 3)
    path = tmp_path / "grid.csv"
    write_grid_csv(samples, path)
    header, rows = _read(path)
    assert header == list(GRID_COLUMNS)
    assert len(rows) == len(samples)
    for row, s in zip(rows, samples):
        assert [float(x) for x in row] == [s.q1, s.q2, s.v_g, s.v_s, s.v_total]


def test_trajectory_csv_round_trip(reference_model, tmp_path):
    points = shooting_trajectory(reference_model, 5)
    path = tmp_path / "trajectory.csv"
    write_trajectory_csv(points, path)
    header, rows = _read(path)
    assert header == list(TRAJECTORY_COLUMNS)
    assert len(rows) == 5
    for row, p in zip(rows, points):
        want = [p.t, p.q.q1, p.q.q2, p.energies.v_g, p.energies.v_s,
                p.energies.v_total, p.torque[0], p.torque[1]]
        assert [float(x) for x in row] == want


def test_study_csv_round_trip(tmp_path):
    rows_in = mass_study(REF_MASSES, derive_architecture(REF_L1), 9.81, 0.0, 4.0, 5)
    path = tmp_path / "study.csv"
    write_study_csv(rows_in, path)
    header, rows = _read(path)
    assert header == list(STUDY_COLUMNS)
    for row, r in zip(rows, rows_in):
        want = [r.added_arm_mass, r.m1_eff, r.m2_eff, r.k1, r.k2, r.constant_V]
        assert [float(x) for x in row] == want


def test_repeated_writes_are_bit_identical(reference_model, tmp_path):
    samples = sweep_grid(reference_model, 5, 5)
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    write_grid_csv(samples, a)
    write_grid_csv(samples, b)
    assert a.read_bytes() == b.read_bytes()


def test_newline_discipline(reference_model, tmp_path):
    path = tmp_path / "grid.csv"
    write_grid_csv(sweep_grid(reference_model, 2, 2), path)
    raw = path.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")


def test_write_csv_infers_each_kind(reference_model, tmp_path):
    datasets = {
        "grid": sweep_grid(reference_model, 3, 3),
        "trajectory": shooting_trajectory(reference_model, 3),
        "study": mass_study(REF_MASSES, derive_architecture(REF_L1), 9.81, 0.0, 2.0, 3),
    }
    headers = {
        "grid": list(GRID_COLUMNS),
        "trajectory": list(TRAJECTORY_COLUMNS),
        "study": list(STUDY_COLUMNS),
    }
    for kind, dataset in datasets.items():
        path = tmp_path / f"{kind}.csv"
        write_csv(dataset, path)
        header, rows = _read(path)
        assert header == headers[kind]
        assert len(rows) == len(dataset)


def test_write_csv_empty_needs_explicit_kind(tmp_path):
    path = tmp_path / "empty.csv"
    with pytest.raises(ValueError):
        write_csv([], path)
    write_csv([], path, kind="study")
    header, rows = _read(path)
    assert header == list(STUDY_COLUMNS)
    assert rows == []


def test_write_csv_rejects_unknown_kind(reference_model, tmp_path):
    with pytest.raises(ValueError, match="unknown dataset kind"):
        write_csv(sweep_grid(reference_model, 2, 2), tmp_path / "x.csv", kind="matrix")


def test_write_csv_rejects_foreign_rows(tmp_path):
    with pytest.raises(ValueError, match="unrecognized"):
        write_csv([(1.0, 2.0)], tmp_path / "x.csv")
