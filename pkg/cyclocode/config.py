"""Settings: CLI flag → env var → config table → default."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields
from typing import Any, Callable, Optional

from cyclocode.core.characters import DEFAULT_TOLERANCE
from cyclocode.core.code import DEFAULT_ENUMERATION_BUDGET
from cyclocode.core.field import DEFAULT_FIELD_CAP
from cyclocode.core.subspace import DEFAULT_SUBSPACE_BUDGET
from cyclocode.errors import InvalidArgument

logger = logging.getLogger(__name__)


@dataclass
class Settings:
    field_cap: int = DEFAULT_FIELD_CAP
    subspace_budget: int = DEFAULT_SUBSPACE_BUDGET
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    tolerance: float = DEFAULT_TOLERANCE
    threads: int = 1

    def ghw_options(self) -> dict[str, Any]:
        return {
            "threads": self.threads,
            "budget": self.subspace_budget,
            "tolerance": self.tolerance,
        }


# config-table key (dashes) -> (field name, parser)
_KEYS: dict[str, tuple[str, Callable[[str], Any]]] = {
    "field-cap": ("field_cap", int),
    "subspace-budget": ("subspace_budget", int),
    "enumeration-budget": ("enumeration_budget", int),
    "tolerance": ("tolerance", float),
    "threads": ("threads", int),
}


def config_keys() -> list[str]:
    return list(_KEYS)


def parse_setting(key: str, value: str) -> Any:
    """Parse and range-check a config value, or raise InvalidArgument."""
    if key not in _KEYS:
        raise InvalidArgument(f"Unknown config key: {key!r}. Valid keys: {', '.join(_KEYS)}")
    name, parser = _KEYS[key]
    try:
        parsed = parser(value)
    except ValueError:
        raise InvalidArgument(f"{key} must be a {parser.__name__}, got {value!r}") from None
    if parsed <= 0:
        raise InvalidArgument(f"{key} must be positive, got {value!r}")
    return parsed


def _env_name(field_name: str) -> str:
    return f"CYCLOCODE_{field_name.upper()}"


def resolve_settings(
    overrides: Optional[dict[str, Any]] = None, store: Any = None
) -> Settings:
    """Resolve every setting; ``overrides`` holds CLI flags (None means unset)."""
    overrides = overrides or {}
    owned = False
    if store is None:
        try:
            from cyclocode.data.store import DataStore

            store = DataStore()
            owned = True
        except Exception:
            logger.debug("Config store unavailable, using env and defaults", exc_info=True)
    values: dict[str, Any] = {}
    by_field = {name: key for key, (name, _) in _KEYS.items()}
    for f in fields(Settings):
        key = by_field[f.name]
        flag = overrides.get(f.name)
        if flag is not None:
            values[f.name] = parse_setting(key, str(flag))
            continue
        env = os.environ.get(_env_name(f.name))
        if env:
            values[f.name] = parse_setting(key, env)
            continue
        stored = store.get_config(key) if store is not None else None
        if stored:
            values[f.name] = parse_setting(key, stored)
    if owned:
        store.close()
    return Settings(**values)
