"""
Run settings for cosbound.

Settings come from three layers: built-in defaults, an optional plain
``key = value`` file, and command-line flags (highest precedence).
"""

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping, Optional

from .exceptions import ConfigError


CONFIG_ENV_VAR = "COSBOUND_CONFIG"


@dataclass(frozen=True)
class Settings:
    """Every tunable of a computation run."""

    grid: int = 2001
    seed: int = 42
    restarts: int = 2
    jobs: int = 1
    mu_first_exponent: int = 2
    mu_last_exponent: int = 9
    grad_tol: float = 1e-10
    step_tol: float = 1e-13
    max_iters: int = 500
    membership_tol: float = 1e-9
    # coefficient tables typeset to 7 decimals round small a_k below zero
    verify_tol: float = 1e-7
    refine_halfwidth: Optional[float] = None
    refine_tol: float = 1e-8
    samples: int = 100_000
    polish: int = 50
    audit_points: int = 4
    strict_paper_bounds: bool = False

    def with_overrides(self, overrides: Mapping[str, Any]) -> "Settings":
        """Return a copy with the non-None overrides applied."""
        known = {f.name for f in fields(self)}
        values = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise ConfigError(f"unknown setting {key!r}")
            values[key] = value
        settings = replace(self, **values)
        settings.validate()
        return settings

    def validate(self) -> None:
        """Check value ranges."""
        if self.grid < 2:
            raise ConfigError("grid must be at least 2")
        if self.restarts < 0:
            raise ConfigError("restarts must be nonnegative")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if self.mu_last_exponent < 8 or self.mu_first_exponent > self.mu_last_exponent:
            raise ConfigError("penalty schedule must be ascending and reach 1e8")
        if min(self.grad_tol, self.step_tol, self.membership_tol, self.verify_tol) <= 0:
            raise ConfigError("tolerances must be positive")
        if self.max_iters < 1:
            raise ConfigError("max_iters must be at least 1")
        if self.refine_halfwidth is not None and self.refine_halfwidth <= 0:
            raise ConfigError("refine_halfwidth must be positive")
        if self.samples < 1000:
            raise ConfigError("samples must be at least 1000")


def _coerce(name: str, raw: str, template: Any) -> Any:
    kind = float if template is None else type(template)
    try:
        if kind is bool:
            lowered = raw.lower()
            if lowered in ("1", "true", "yes", "on"):
                return True
            if lowered in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
        if kind is int:
            return int(raw)
        if template is None and raw.lower() in ("none", ""):
            return None
        return float(raw)
    except ValueError as e:
        raise ConfigError(f"bad value for {name}: {raw!r}") from e


def parse_config_text(text: str) -> dict[str, Any]:
    """
    Parse ``key = value`` config text.

    Args:
        text: File contents; ``#`` starts a comment, blank lines are ignored

    Returns:
        Mapping of setting name to typed value

    Raises:
        ConfigError: On unknown keys, malformed lines or bad values
    """
    defaults = Settings()
    known = {f.name: getattr(defaults, f.name) for f in fields(defaults)}
    values: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown setting {key!r}")
        values[key] = _coerce(key, raw, known[key])
    return values


def load_settings(
    config_path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None
) -> Settings:
    """
    Build the effective settings.

    Args:
        config_path: Explicit config file; falls back to $COSBOUND_CONFIG
        overrides: Flag values (None means "not given")

    Returns:
        Validated Settings
    """
    settings = Settings()
    path = config_path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {path}")
        settings = settings.with_overrides(parse_config_text(p.read_text(encoding="utf-8")))
    return settings.with_overrides(overrides or {})
