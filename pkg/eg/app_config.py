"""Centralized application config with sensible defaults.

All tunable constants live here. Override via sections in edugraph.toml.
Singleton ``cfg`` is created at import time with defaults. ``load()`` mutates
the existing object so every module that imported ``cfg`` sees updates.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field, fields

from eg.errors import EduGraphError


class ConfigError(EduGraphError):
    """Unknown section/key or an invalid value in the config file."""


@dataclass
class Scoring:
    """Resource scoring weights (recommender)."""

    difficulty: float = 0.4
    media: float = 0.3
    quality: float = 0.2
    duration: float = 0.1


@dataclass
class Requirements:
    """Recommendation requirements used to weigh learning paths."""

    difficulty_fit: float = 0.4
    preference_fit: float = 0.3
    quality: float = 0.2
    path_length: float = 0.1
    max_paths: int = 3


@dataclass
class Profile:
    ema_alpha: float = 0.3
    neutral_fill: float = 0.5
    neutral_preference: float = 0.5
    recommendations_per_topic: int = 3


@dataclass
class Paths:
    workspace: str = "workspace.ttl"
    log_dir: str = "logs"
    main_log: str = "edugraph.log"
    config_file: str = "edugraph.toml"
    data: list[str] = field(default_factory=list)


@dataclass
class Display:
    format: str = "table"
    table_width: int = 120


@dataclass
class Logging:
    level: str = "INFO"
    truncate_on_start: bool = False


@dataclass
class AppConfig:
    scoring: Scoring
    requirements: Requirements
    profile: Profile
    paths: Paths
    display: Display
    logging: Logging
    locale: str = ""


def _make_default() -> AppConfig:
    return AppConfig(
        scoring=Scoring(),
        requirements=Requirements(),
        profile=Profile(),
        paths=Paths(),
        display=Display(),
        logging=Logging(),
    )


cfg = _make_default()

_SECTION_MAP = {
    "scoring": "scoring",
    "requirements": "requirements",
    "profile": "profile",
    "paths": "paths",
    "display": "display",
    "logging": "logging",
}

# Handled by eg.defaults, not by this loader.
_EXTERNAL_SECTIONS = {"indicators", "constructs"}

_TOP_LEVEL = {"locale"}

_FORMATS = ("table", "tsv", "turtle")


# annotation -> accepted Python types (bool is excluded from the numeric kinds)
_KINDS: dict[str, tuple[type, ...]] = {
    "float": (int, float),
    "int": (int,),
    "str": (str,),
    "bool": (bool,),
    "list[str]": (list,),
}


def _check_type(where: str, annotation: str, value: object) -> None:
    kinds = _KINDS[annotation]
    ok = isinstance(value, kinds) and not (isinstance(value, bool) and bool not in kinds)
    if annotation == "list[str]" and ok:
        ok = all(isinstance(x, str) for x in value)  # type: ignore[union-attr]
    if not ok:
        raise ConfigError(f"{where} must be {annotation}, got {type(value).__name__}")


def load(app_dict: dict) -> None:
    """Update ``cfg`` from a parsed config file.

    Values are applied to a copy and checked there; ``cfg`` changes only if the
    whole file is valid. Raises ConfigError on unknown keys, wrong value types
    and failed range checks.
    """
    if not app_dict:
        return
    staged = copy.deepcopy(cfg)
    for k, v in app_dict.items():
        if k in _TOP_LEVEL:
            _check_type(k, "str", v)
            setattr(staged, k, v)
            continue
        if k in _EXTERNAL_SECTIONS:
            continue
        if k not in _SECTION_MAP:
            raise ConfigError(f"Unknown config section: '{k}'")
        if not isinstance(v, dict):
            raise ConfigError(f"Config section '{k}' must be a table")
        group = getattr(staged, _SECTION_MAP[k])
        annotations = {f.name: f.type for f in fields(group)}
        for key, value in v.items():
            if key not in annotations:
                raise ConfigError(f"Unknown key in [{k}]: '{key}'")
            _check_type(f"[{k}] {key}", str(annotations[key]), value)
            setattr(group, key, value)
    _check(staged)
    for f in fields(cfg):
        setattr(cfg, f.name, getattr(staged, f.name))


def _check(conf: AppConfig) -> None:
    """Validate cross-field invariants of a loaded config."""
    s = conf.scoring
    _check_weights("scoring", [s.difficulty, s.media, s.quality, s.duration])
    r = conf.requirements
    _check_weights(
        "requirements",
        [r.difficulty_fit, r.preference_fit, r.quality, r.path_length],
    )
    if r.max_paths < 1:
        raise ConfigError("[requirements] max_paths must be >= 1")
    p = conf.profile
    if not 0.0 <= p.ema_alpha <= 1.0:
        raise ConfigError("[profile] ema_alpha must be in [0, 1]")
    for name in ("neutral_fill", "neutral_preference"):
        if not 0.0 <= getattr(p, name) <= 1.0:
            raise ConfigError(f"[profile] {name} must be in [0, 1]")
    if p.recommendations_per_topic < 0:
        raise ConfigError("[profile] recommendations_per_topic must be >= 0")
    if conf.display.format not in _FORMATS:
        raise ConfigError(
            f"[display] format must be one of {', '.join(_FORMATS)}"
        )


def _check_weights(section: str, weights: list[float]) -> None:
    if any(w < 0 for w in weights):
        raise ConfigError(f"[{section}] weights must be >= 0")
    if abs(math.fsum(weights) - 1.0) > 1e-9:
        raise ConfigError(f"[{section}] weights must sum to 1")


def reset() -> None:
    """Restore ``cfg`` to defaults (preserves object identity)."""
    fresh = _make_default()
    for f in fields(cfg):
        setattr(cfg, f.name, getattr(fresh, f.name))
