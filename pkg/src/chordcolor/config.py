"""Run configuration, loadable from YAML or JSON files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from chordcolor.generators import ListDensity
from chordcolor.solver import DEFAULT_BASE_THRESHOLD, MIN_BASE_THRESHOLD


class OutputFormat(Enum):
    TEXT = "text"
    JSONL = "jsonl"
    SVG = "svg"


@dataclass
class RunConfig:
    """Settings shared by the CLI commands. Flags override file values."""

    seed: int = 0
    base_threshold: int = DEFAULT_BASE_THRESHOLD
    budget: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    split_components: bool = False
    sizes: list[int] = field(default_factory=lambda: [6, 8, 10, 12])
    trials: int = 5
    density: ListDensity = ListDensity.FULL
    drop_probability: float = 0.5
    check_oracle: bool = False


class ConfigError(Exception):
    """Error raised when a run configuration cannot be parsed.

    Attributes:
        errors: List of (field_path, reason) tuples.
    """

    def __init__(self, errors: list[tuple[str, str]]) -> None:
        self.errors = errors
        lines = [f"  {path}: {reason}" for path, reason in errors]
        super().__init__(
            f"Run configuration has {len(errors)} error(s):\n" + "\n".join(lines)
        )


def _type_name(expected: type | tuple[type, ...]) -> str:
    if isinstance(expected, tuple):
        return " or ".join(t.__name__ for t in expected)
    return expected.__name__


def _optional(
    data: dict[str, Any],
    key: str,
    expected_type: type | tuple[type, ...],
    errors: list[tuple[str, str]],
    default: Any = None,
) -> Any:
    """Validate an optional field if present."""
    if key not in data or data[key] is None:
        return default
    val = data[key]
    # bool is an int subclass; only accept it where bool is expected
    wrong_bool = isinstance(val, bool) and expected_type is not bool
    if wrong_bool or not isinstance(val, expected_type):
        errors.append(
            (
                f"$.{key}",
                f"expected {_type_name(expected_type)}, got {type(val).__name__}",
            )
        )
        return default
    return val


def _optional_enum(
    data: dict[str, Any],
    key: str,
    enum_type: type[Enum],
    errors: list[tuple[str, str]],
    default: Enum,
) -> Any:
    raw = _optional(data, key, str, errors, None)
    if raw is None:
        return default
    try:
        return enum_type(raw)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_type)
        errors.append((f"$.{key}", f"unknown value {raw!r}; expected one of {allowed}"))
        return default


_KNOWN_KEYS = {
    "seed",
    "base_threshold",
    "budget",
    "output_format",
    "split_components",
    "sizes",
    "trials",
    "density",
    "drop_probability",
    "check_oracle",
}


def _parse_config_dict(data: Any) -> RunConfig:
    """Parse a raw mapping into a RunConfig, collecting all errors."""
    errors: list[tuple[str, str]] = []
    if data is None:
        return RunConfig()
    if not isinstance(data, dict):
        raise ConfigError([("$", f"expected object, got {type(data).__name__}")])

    for key in sorted(set(data) - _KNOWN_KEYS):
        errors.append((f"$.{key}", "unknown field"))

    defaults = RunConfig()
    config = RunConfig(
        seed=_optional(data, "seed", int, errors, defaults.seed),
        base_threshold=_optional(
            data, "base_threshold", int, errors, defaults.base_threshold
        ),
        budget=_optional(data, "budget", int, errors),
        output_format=_optional_enum(
            data, "output_format", OutputFormat, errors, defaults.output_format
        ),
        split_components=_optional(
            data, "split_components", bool, errors, defaults.split_components
        ),
        sizes=_optional(data, "sizes", list, errors, defaults.sizes),
        trials=_optional(data, "trials", int, errors, defaults.trials),
        density=_optional_enum(data, "density", ListDensity, errors, defaults.density),
        drop_probability=_optional(
            data, "drop_probability", (int, float), errors, defaults.drop_probability
        ),
        check_oracle=_optional(
            data, "check_oracle", bool, errors, defaults.check_oracle
        ),
    )

    if config.base_threshold < MIN_BASE_THRESHOLD:
        errors.append(("$.base_threshold", f"must be at least {MIN_BASE_THRESHOLD}"))
    if config.budget is not None and config.budget < 1:
        errors.append(("$.budget", "must be positive"))
    if config.trials < 1:
        errors.append(("$.trials", "must be positive"))
    for i, size in enumerate(config.sizes):
        if isinstance(size, bool) or not isinstance(size, int) or size < 1:
            errors.append((f"$.sizes[{i}]", f"expected positive int, got {size!r}"))
    if not 0.0 <= config.drop_probability <= 1.0:
        errors.append(("$.drop_probability", "must be between 0 and 1"))

    if errors:
        raise ConfigError(errors)
    config.drop_probability = float(config.drop_probability)
    return config


def _load(text: str, format: str) -> Any:
    if format == "json":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError([("$", f"invalid JSON: {exc.args[0]}")]) from exc
    if format == "yaml":
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ConfigError([("$", f"invalid YAML: {exc}")]) from exc
    raise ValueError(f"Unsupported format {format!r}; expected 'json' or 'yaml'")


def load_run_config(path: str | Path) -> RunConfig:
    """Load a run configuration; the format follows the file extension.

    Raises:
        ConfigError: If the configuration has validation errors.
        FileNotFoundError: If the file does not exist.
        ValueError: If the file extension is unsupported.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    suffix = path.suffix.lower()
    if suffix == ".json":
        format = "json"
    elif suffix in (".yaml", ".yml"):
        format = "yaml"
    else:
        raise ValueError(
            f"Unsupported file extension {suffix!r}; expected .json, .yaml, or .yml"
        )
    return _parse_config_dict(_load(path.read_text(encoding="utf-8"), format))


def parse_run_config_string(text: str, *, format: str = "yaml") -> RunConfig:
    """Parse a YAML (default) or JSON string into a RunConfig."""
    return _parse_config_dict(_load(text, format))
