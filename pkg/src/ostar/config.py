"""Resource caps, run configuration and shared exceptions."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field

__version__ = "0.1.0"

DEFAULT_MAX_CELLS = 10**7
DEFAULT_MAX_VERTICES = 200_000
DEFAULT_MAX_SUMMANDS = 10**6


class ResourceLimitError(RuntimeError):
    """A computation would exceed one of the configured caps."""


class MembershipError(ValueError):
    """An element does not lie in the subset an operation requires."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_cells() -> int:
    return _env_int("OSTAR_MAX_CELLS", DEFAULT_MAX_CELLS)


def max_vertices() -> int:
    return _env_int("OSTAR_MAX_VERTICES", DEFAULT_MAX_VERTICES)


def max_summands() -> int:
    return _env_int("OSTAR_MAX_SUMMANDS", DEFAULT_MAX_SUMMANDS)


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    max_cells: int = field(default_factory=max_cells)
    max_vertices: int = field(default_factory=max_vertices)
    max_summands: int = field(default_factory=max_summands)
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        for name in ("max_cells", "max_vertices", "max_summands"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def to_dict(self) -> dict:
        return asdict(self)
