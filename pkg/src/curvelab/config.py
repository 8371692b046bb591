"""Tolerance and resolution configuration.

Every numeric gate in the engine reads from a ``Config`` instance, so
tolerances can be overridden per call, via CLI flags, or through
``CURVELAB_TOL_<NAME>`` environment variables (flags win over env vars).
All final counts are integers; tolerances only gate root dedup and
genericity rejection, never the reported identities.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    # projective equality of points/lines (sine of angle between rays)
    tol_pt: float = 1e-9
    # collinearity threshold for the orientation predicate
    tol_orient: float = 1e-10
    # relative residual below which a curvature zero is considered degenerate
    tol_flex: float = 1e-7
    # projective equality of lines when grouping tangency records
    tol_line: float = 1e-8
    # relative residual target for Newton polish
    tol_resid: float = 1e-12
    # defining-polynomial residual allowed on traced points (relative)
    tol_trace: float = 1e-9
    # endpoint matching when assembling traced loops
    tol_glue: float = 1e-6
    # parameter-space guard around the diagonal of pair systems
    diag_guard: float = 1e-3
    # subdivision cells per parameter axis (bitangent/node search)
    subdiv: int = 2048
    # samples per axis for 1D scans (flexes, line sections)
    scan_1d: int = 4096
    # base samples per component for the jump-function grid
    jump_samples: int = 256
    # seed-section lines per direction per chart for algebraic tracing
    trace_seeds: int = 64
    # arclength step for curve continuation (on the unit sphere)
    trace_step: float = 5e-3
    # harmonics kept when fitting traced loops
    fit_degree: int = 96

    def replace(self, **kw) -> "Config":
        return dataclasses.replace(self, **kw)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in dataclasses.fields(cls)]

    @classmethod
    def from_env(cls, base: "Config | None" = None) -> "Config":
        """Apply CURVELAB_TOL_<NAME> environment overrides to ``base``."""
        cfg = base or cls()
        overrides = {}
        for f in dataclasses.fields(cls):
            raw = os.environ.get(f"CURVELAB_TOL_{f.name.upper()}")
            if raw is not None:
                overrides[f.name] = int(raw) if f.type == "int" else float(raw)
        return cfg.replace(**overrides) if overrides else cfg


DEFAULT = Config()
