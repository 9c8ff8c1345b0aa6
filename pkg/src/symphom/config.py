"""Run configuration and numerical tolerances."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace

from symphom.actions import ActionValue


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used by the crossing machinery.

    sym    -- max-norm defect of M^T J M - J accepted as symplectic
    cross  -- final bracket width when locating a crossing numerically
    ker    -- singular values of Id - M at or below this span the kernel
    eig    -- crossing-form eigenvalues at or below this count as zero
    gen    -- relative asymmetry allowed in the recovered generator S(t)
    """

    sym: float = 1e-9
    cross: float = 1e-10
    ker: float = 1e-8
    eig: float = 1e-8
    gen: float = 1e-3

    def __post_init__(self):
        for f in fields(self):
            if not getattr(self, f.name) > 0:
                raise ValueError(f"tolerance {f.name} must be positive")

    def with_overrides(self, **kw) -> "Tolerances":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class RunConfig:
    tol: Tolerances = field(default_factory=Tolerances)
    horizon: ActionValue = field(default_factory=lambda: ActionValue.pi(6))
    field: int = 0
    fmt: str = "json"
    verbose: int = 0

    def __post_init__(self):
        if not self.horizon > ActionValue.pi(0):
            raise ValueError("horizon must be positive")
        if self.fmt not in ("json", "tsv"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if self.field < 0:
            raise ValueError("field must be 0 (rationals) or a prime")
