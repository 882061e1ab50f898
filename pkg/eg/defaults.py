"""Load edugraph.toml: app settings plus indicator/construct declarations."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ModuleNotFoundError:
    try:
        import tomli as tomllib  # type: ignore[no-redef]
    except ModuleNotFoundError:
        print("Python < 3.11 requires 'tomli': pip install tomli", file=sys.stderr)
        sys.exit(1)

from eg import app_config
from eg.app_config import ConfigError
from eg.recommender import (
    ConstructComponent,
    ConstructDefinition,
    IndicatorSpec,
    InvalidConstruct,
    UnknownIndicator,
)


@dataclass
class PsychModel:
    """Declared indicators and the constructs computed from them."""

    indicators: dict[str, IndicatorSpec] = field(default_factory=dict)
    constructs: list[ConstructDefinition] = field(default_factory=list)


def read(path: Path) -> dict:
    """Parse a TOML file. Raises ConfigError with the file name on bad syntax."""
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except OSError as e:
        raise ConfigError(f"{path}: {e.strerror or e}") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}") from e


def load(path: Optional[Path]) -> PsychModel:
    """Apply ``path`` to ``cfg`` and return its psychological model.

    ``None`` keeps built-in defaults and an empty model.
    """
    if path is None:
        return PsychModel()
    data = read(path)
    app_config.load(data)
    indicators = parse_indicators(data.get("indicators", {}))
    return PsychModel(indicators, parse_constructs(data.get("constructs", {}), indicators))


def parse_indicators(section: dict) -> dict[str, IndicatorSpec]:
    """[indicators.<id>] tables: kind ("static"|"dynamic"), min, max."""
    out: dict[str, IndicatorSpec] = {}
    for ind_id, raw in sorted(section.items()):
        if not isinstance(raw, dict):
            raise ConfigError(f"[indicators.{ind_id}] must be a table")
        unknown = set(raw) - {"kind", "min", "max"}
        if unknown:
            raise ConfigError(f"Unknown key in [indicators.{ind_id}]: '{sorted(unknown)[0]}'")
        try:
            out[ind_id] = IndicatorSpec(
                ind_id,
                raw.get("kind", "dynamic"),
                float(raw.get("min", 0.0)),
                float(raw.get("max", 1.0)),
            )
        except (InvalidConstruct, TypeError, ValueError) as e:
            raise ConfigError(f"[indicators.{ind_id}] {e}") from e
    return out


def parse_constructs(
    section: dict,
    indicators: dict[str, IndicatorSpec],
) -> list[ConstructDefinition]:
    """[constructs.<id>] tables mapping indicator ids to {weight, direction}.

    Raises UnknownIndicator for an undeclared indicator, ConfigError otherwise.
    """
    out = []
    for c_id, raw in sorted(section.items()):
        if not isinstance(raw, dict) or not raw:
            raise ConfigError(f"[constructs.{c_id}] must list at least one indicator")
        components = []
        for ind_id, spec in sorted(raw.items()):
            if ind_id not in indicators:
                raise UnknownIndicator(
                    f"construct '{c_id}' references undeclared indicator '{ind_id}'"
                )
            if isinstance(spec, (int, float)):
                spec = {"weight": spec}
            if not isinstance(spec, dict):
                raise ConfigError(f"[constructs.{c_id}] {ind_id} must be a number or table")
            components.append(ConstructComponent(
                ind_id,
                float(spec.get("weight", 0.0)),
                str(spec.get("direction", "+")),
            ))
        try:
            out.append(ConstructDefinition(c_id, tuple(components)))
        except InvalidConstruct as e:
            raise ConfigError(str(e)) from e
    return out
