import pytest

from exobalance import derive_architecture, mass_study, render_plot, shooting_trajectory, sweep_grid
from exobalance.plots import plot_grid, plot_study, plot_trajectory

from conftest import REF_L1, REF_MASSES


def _assert_svg(path):
    text = path.read_text(encoding="utf-8")
    assert "<svg" in text
    assert "</svg>" in text


def test_plot_grid_writes_svg(reference_model, tmp_path):
    path = tmp_path / "grid.svg"
    plot_grid(sweep_grid(reference_model, 6, 6), path)
    _assert_svg(path)


def test_plot_trajectory_writes_svg(reference_model, tmp_path):
    path = tmp_path / "trajectory.svg"
    plot_trajectory(shooting_trajectory(reference_model, 11), path)
    _assert_svg(path)


def test_plot_study_writes_svg(tmp_path):
    rows = mass_study(REF_MASSES, derive_architecture(REF_L1), 9.81, 0.0, 4.0, 5)
    path = tmp_path / "study.svg"
    plot_study(rows, path)
    _assert_svg(path)


def test_pdf_suffix_selects_pdf(reference_model, tmp_path):
    path = tmp_path / "grid.pdf"
    plot_grid(sweep_grid(reference_model, 4, 4), path)
    assert path.read_bytes().startswith(b"%PDF")


def test_render_plot_dispatches(reference_model, tmp_path):
    datasets = {
        "grid": sweep_grid(reference_model, 4, 4),
        "trajectory": shooting_trajectory(reference_model, 5),
        "study": mass_study(REF_MASSES, derive_architecture(REF_L1), 9.81, 0.0, 2.0, 3),
    }
    for kind, dataset in datasets.items():
        path = tmp_path / f"{kind}.svg"
        render_plot(dataset, path)
        _assert_svg(path)


def test_render_plot_rejects_unknown_kind(reference_model, tmp_path):
    with pytest.raises(ValueError, match="unknown dataset kind"):
        render_plot(sweep_grid(reference_model, 3, 3), tmp_path / "x.svg", kind="matrix")


@pytest.mark.parametrize("func", [plot_grid, plot_trajectory, plot_study, render_plot])
def test_empty_dataset_rejected(func, tmp_path):
    with pytest.raises(ValueError):
        func([], tmp_path / "x.svg")
