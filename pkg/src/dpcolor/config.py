"""Runtime caps and knobs, overridable via DPCOLOR_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

_ENV_PREFIX = "DPCOLOR_"


@dataclass(frozen=True)
class Config:
    """Resource caps and output settings shared across the library and CLI.

    All caps are positive.  Searches that would exceed a cap raise
    :class:`dpcolor.errors.CapExceeded` instead of returning an answer.
    """

    node_budget: int = 5_000_000          # backtracking nodes per solve/search call
    max_total_degree: int = 24            # sum-of-degrees cap for degree-cover work
    max_pair_choices: int = 10_000_000    # per-pair cross-edge choices when enumerating
    max_transversal_space: int = 500_000  # product-space cap for uncolorable-cover search
    worker_count: int = 1                 # parallel workers for census runs
    strict: bool = False                  # reject invalid cover files at parse time
    output_format: str = "text"           # "text" | "lines"
    verify_witnesses: bool = True         # re-check emitted bad covers with the solver
    vertex_deletion_max_n: int = 5        # extra vertex-deletion checks in check_critical

    def __post_init__(self):
        for name in ("node_budget", "max_total_degree", "max_pair_choices",
                     "max_transversal_space", "worker_count"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("text", "lines"):
            raise ValueError("output_format must be 'text' or 'lines'")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        """Build a config from DPCOLOR_* environment variables plus overrides."""
        values = {}
        for f in fields(cls):
            raw = os.environ.get(_ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            if f.type in ("int", int):
                values[f.name] = int(raw)
            elif f.type in ("bool", bool):
                values[f.name] = raw.strip().lower() in ("1", "true", "yes", "on")
            else:
                values[f.name] = raw
        values.update(overrides)
        return cls(**values)


DEFAULT = Config()


def with_overrides(config: Config | None, **overrides) -> Config:
    base = config if config is not None else DEFAULT
    return replace(base, **overrides) if overrides else base
