"""Resource ceilings and runtime switches.

Exhaustive enumeration grows like the ordered Bell numbers, so every operation
that walks a full set of rankings (or Stirling permutations) is guarded by a
ceiling.  Ceilings are configuration, not constants: explicit arguments win
over environment variables, which win over the defaults below.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_N_CEILING = "FUBINI_N_CEILING"
ENV_STIRLING_CEILING = "FUBINI_STIRLING_CEILING"
ENV_ALLOW_EMPTY = "FUBINI_ALLOW_EMPTY"

DEFAULT_N_CEILING = 10
DEFAULT_STIRLING_CEILING = 6


class CeilingExceeded(RuntimeError):
    """Raised when an enumeration request is above the configured ceiling."""


@dataclass(frozen=True)
class Limits:
    n_ceiling: int = DEFAULT_N_CEILING
    stirling_ceiling: int = DEFAULT_STIRLING_CEILING
    allow_empty: bool = False

    def check_length(self, n: int) -> None:
        if n > self.n_ceiling:
            raise CeilingExceeded(
                f"length n={n} exceeds the enumeration ceiling ({self.n_ceiling}); "
                f"raise it with --n-ceiling or the {ENV_N_CEILING} environment variable"
            )

    def check_stirling_order(self, m: int) -> None:
        if m > self.stirling_ceiling:
            raise CeilingExceeded(
                f"order m={m} exceeds the Stirling ceiling ({self.stirling_ceiling}); "
                f"raise it with --stirling-ceiling or the {ENV_STIRLING_CEILING} "
                "environment variable"
            )


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


def _env_flag(name: str) -> bool | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    return raw.strip().lower() in ("1", "true", "yes", "on")


def resolve_limits(
    n_ceiling: int | None = None,
    stirling_ceiling: int | None = None,
    allow_empty: bool | None = None,
) -> Limits:
    """Build a Limits value: explicit args > environment > defaults."""
    if n_ceiling is None:
        n_ceiling = _env_int(ENV_N_CEILING)
    if stirling_ceiling is None:
        stirling_ceiling = _env_int(ENV_STIRLING_CEILING)
    if allow_empty is None:
        allow_empty = _env_flag(ENV_ALLOW_EMPTY)
    return Limits(
        n_ceiling=DEFAULT_N_CEILING if n_ceiling is None else n_ceiling,
        stirling_ceiling=(
            DEFAULT_STIRLING_CEILING if stirling_ceiling is None else stirling_ceiling
        ),
        allow_empty=bool(allow_empty) if allow_empty is not None else False,
    )
