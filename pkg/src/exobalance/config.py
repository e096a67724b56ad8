"""TOML run configuration: parsing, defaults, validation, serialization.

The config is a flat TOML document. Recognized keys:

    l1 (required)                shoulder link length [m]
    m1 .. m6 (default 0)         link masses [kg]
    g (default 9.81)             gravitational acceleration [m/s^2]
    k1, k2 (default: solved)     explicit spring stiffnesses [N/m]
    grid_n1, grid_n2 (101, 101)  sweep grid resolution
    traj_n (201)                 trajectory point count
    study_min, study_max (0, 10) added-arm-mass range [kg]
    study_n (11)                 mass-study row count
    upper_fraction (0.5)         share of arm mass on link 1
    out_dir ("out")              output directory for CSVs and plots

When k1/k2 are omitted they are solved from the balance conditions before
any energy evaluation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .model import ExoModel, MassSet, SpringPair, derive_architecture, validate_model
from .balance import solve_spring_constants


class ConfigError(ValueError):
    """A malformed or invalid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters (defaults applied)."""

    l1: float
    m1: float = 0.0
    m2: float = 0.0
    m3: float = 0.0
    m4: float = 0.0
    m5: float = 0.0
    m6: float = 0.0
    g: float = 9.81
    k1: float | None = None
    k2: float | None = None
    grid_n1: int = 101
    grid_n2: int = 101
    traj_n: int = 201
    study_min: float = 0.0
    study_max: float = 10.0
    study_n: int = 11
    upper_fraction: float = 0.5
    out_dir: str = "out"


_FLOAT_KEYS = (
    "l1", "m1", "m2", "m3", "m4", "m5", "m6", "g", "k1", "k2",
    "study_min", "study_max", "upper_fraction",
)
_COUNT_KEYS = ("grid_n1", "grid_n2", "traj_n", "study_n")
_KNOWN_KEYS = frozenset(_FLOAT_KEYS) | frozenset(_COUNT_KEYS) | {"out_dir"}


def _as_float(key: str, value: object) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key {key!r} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"key {key!r} must be finite, got {value!r}")
    return value


def _as_count(key: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"key {key!r} must be an integer, got {value!r}")
    if value < 2:
        raise ConfigError(f"key {key!r} must be at least 2, got {value}")
    return value


def parse_config(text: str) -> RunConfig:
    """Parse a TOML config document into a validated RunConfig.

    Raises ConfigError for malformed TOML, unknown keys, wrong types,
    non-finite values, a missing l1, out-of-range counts or fractions,
    and any model-invariant violation (negative mass, negative explicit
    stiffness, non-positive g or l1).
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"malformed config document: {exc}") from exc

    for key in data:
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
    if "l1" not in data:
        raise ConfigError("missing required key 'l1'")

    values: dict[str, object] = {}
    for key in _FLOAT_KEYS:
        if key in data:
            values[key] = _as_float(key, data[key])
    for key in _COUNT_KEYS:
        if key in data:
            values[key] = _as_count(key, data[key])
    if "out_dir" in data:
        if not isinstance(data["out_dir"], str):
            raise ConfigError(f"key 'out_dir' must be a string, got {data['out_dir']!r}")
        values["out_dir"] = data["out_dir"]

    cfg = RunConfig(**values)  # type: ignore[arg-type]

    if not (0.0 <= cfg.upper_fraction <= 1.0):
        raise ConfigError(f"key 'upper_fraction' must lie in [0, 1], got {cfg.upper_fraction!r}")
    if not (0.0 <= cfg.study_min <= cfg.study_max):
        raise ConfigError(
            f"need 0 <= study_min <= study_max, got [{cfg.study_min!r}, {cfg.study_max!r}]"
        )

    violations = _model_violations(cfg)
    if violations:
        raise ConfigError("invalid model: " + "; ".join(violations))
    return cfg


def _model_violations(cfg: RunConfig) -> list[str]:
    """Run validate_model on a provisional model built from the config."""
    if not (math.isfinite(cfg.l1) and cfg.l1 > 0.0):
        return [f"l1 must be positive and finite, got {cfg.l1!r}"]
    provisional = ExoModel(
        arch=derive_architecture(cfg.l1),
        masses=MassSet(cfg.m1, cfg.m2, cfg.m3, cfg.m4, cfg.m5, cfg.m6),
        springs=SpringPair(k1=cfg.k1 or 0.0, k2=cfg.k2 or 0.0),
        g=cfg.g,
    )
    return validate_model(provisional)


def format_config(cfg: RunConfig) -> str:
    """Serialize a RunConfig back to TOML; parse_config round-trips it."""
    lines = []
    for field in fields(cfg):
        value = getattr(cfg, field.name)
        if value is None:
            continue
        if isinstance(value, str):
            lines.append(f"{field.name} = {json.dumps(value)}")
        elif isinstance(value, int):
            lines.append(f"{field.name} = {value}")
        else:
            lines.append(f"{field.name} = {value!r}")
    return "\n".join(lines) + "\n"


def build_model(cfg: RunConfig) -> ExoModel:
    """Assemble the ExoModel, solving any stiffness the config leaves open."""
    arch = derive_architecture(cfg.l1)
    masses = MassSet(cfg.m1, cfg.m2, cfg.m3, cfg.m4, cfg.m5, cfg.m6)
    if cfg.k1 is None or cfg.k2 is None:
        solved = solve_spring_constants(masses, arch, cfg.g).springs
        springs = SpringPair(
            k1=solved.k1 if cfg.k1 is None else cfg.k1,
            k2=solved.k2 if cfg.k2 is None else cfg.k2,
        )
    else:
        springs = SpringPair(k1=cfg.k1, k2=cfg.k2)
    return ExoModel(arch=arch, masses=masses, springs=springs, g=cfg.g)
