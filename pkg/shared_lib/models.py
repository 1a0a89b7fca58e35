"""Pydantic models for every record the toolkit produces or consumes."""

from enum import Enum
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from .utils import parse_schedule


class Regime(str, Enum):
    """Scaling regime of the running maximum."""
    SUBDIFFUSIVE = "subdiffusive"
    SSRW = "ssrw"
    SUPERDIFFUSIVE = "superdiffusive"
    BALLISTIC_BOUNDARY = "ballistic_boundary"
    BALLISTIC = "ballistic"


class LimitLaw(str, Enum):
    """Limit law of z(t)/t^nu, one tag per regime."""
    CONSTANT = "deterministic constant"
    INVERSE_SQRT_T = "1/T^{1/2}"
    LEVY_POWER = "(1/2nu)^{2nu}/L^nu"
    INVERSE_4L_PLUS_1 = "1/(4L+1)"
    ONE = "1"


class Engine(str, Enum):
    """Simulation engine."""
    DIRECT = "direct"
    CYCLES = "cycles"


class OutputFormat(str, Enum):
    """Output file format."""
    JSONL = "jsonl"
    CSV = "csv"


# ============================================================================
# Model-core results
# ============================================================================

class RegimePrediction(BaseModel):
    """Exponent, regime and limit law predicted for a model parameter."""
    gamma: float = Field(..., description="Model parameter")
    nu: float = Field(..., gt=0.0, le=1.0, description="Scaling exponent of z(t)")
    regime: Regime = Field(..., description="Scaling regime")
    limit_descriptor: LimitLaw = Field(..., description="Limit law of z(t)/t^nu")
    limit_constant: Optional[float] = Field(
        None, description="Value of the limit when it is deterministic"
    )


class LaplaceGrid(BaseModel):
    """Laplace transform values on an ordered lambda grid."""
    lambdas: List[float] = Field(..., description="Strictly increasing positive lambdas")
    values: List[float] = Field(..., description="Transform values, nonincreasing in lambda")
    stderr: Optional[List[float]] = Field(None, description="Standard errors (empirical grids)")

    @model_validator(mode="after")
    def _check_grid(self) -> "LaplaceGrid":
        if len(self.lambdas) != len(self.values):
            raise ValueError("lambdas and values must have the same length")
        if any(lam <= 0 for lam in self.lambdas):
            raise ValueError("lambdas must be positive")
        if any(b <= a for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise ValueError("lambdas must be strictly increasing")
        if any(not 0.0 <= v <= 1.0 for v in self.values):
            raise ValueError("transform values must lie in [0, 1]")
        if any(b > a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("transform values must be nonincreasing in lambda")
        return self


# ============================================================================
# Simulation records
# ============================================================================

class WalkerState(BaseModel):
    """Instantaneous state of one walker."""
    model_config = ConfigDict(frozen=True)

    x: int = Field(0, description="Signed position")
    z: int = Field(0, ge=0, description="Running maximum of |x|")
    t: int = Field(0, ge=0, description="Time (number of steps taken)")
    gamma: float = Field(..., description="Model parameter")

    @model_validator(mode="after")
    def _check_consistency(self) -> "WalkerState":
        if abs(self.x) > self.z:
            raise ValueError(f"inconsistent state: |x|={abs(self.x)} exceeds z={self.z}")
        if self.z > self.t:
            raise ValueError(f"inconsistent state: z={self.z} exceeds t={self.t}")
        if (self.x + self.t) % 2:
            raise ValueError(f"parity violation: x={self.x}, t={self.t}")
        return self


class CheckpointRecord(BaseModel):
    """Snapshot of one walker at a checkpoint time."""
    walker_id: int = Field(..., ge=0, description="Walker index within the ensemble")
    t: int = Field(..., ge=1, description="Checkpoint time")
    z: int = Field(..., ge=0, description="Running maximum at t")
    x: Optional[int] = Field(None, description="Position at t (absent for cycle reconstructions)")

    @model_validator(mode="after")
    def _check_bounds(self) -> "CheckpointRecord":
        if self.z > self.t:
            raise ValueError(f"z={self.z} exceeds t={self.t}")
        if self.x is not None and abs(self.x) > self.z:
            raise ValueError(f"|x|={abs(self.x)} exceeds z={self.z}")
        return self


class CycleRecord(BaseModel):
    """
    One cycle of the journey decomposition.

    (m, n) are the lazy and active journey lengths of the cycle that ends at
    (t_k, z_k), so t_k = t_{k-1} + 1 + m + n and z_k = z_{k-1} + n. Cycle 1 is
    the initial active journey: m = 0 and t_1 = z_1 = 1 + n.
    """
    walker_id: int = Field(0, ge=0, description="Replica index")
    k: int = Field(..., ge=1, description="Cycle index")
    t_k: int = Field(..., ge=1, description="Cumulative time at the end of the cycle")
    z_k: int = Field(..., ge=1, description="Maximum at the end of the cycle")
    m: int = Field(..., ge=0, description="Lazy journey exit time")
    n: int = Field(..., ge=0, description="Active run length")
    initial: bool = Field(False, description="Synthetic first cycle (no lazy journey)")
    truncated: bool = Field(False, description="Active run cut at the simulation horizon")

    @model_validator(mode="after")
    def _check_cycle(self) -> "CycleRecord":
        if self.initial:
            if self.m != 0 or self.t_k != self.z_k or self.t_k != 1 + self.n:
                raise ValueError("initial cycle must satisfy m = 0 and t_1 = z_1 = 1 + n")
        elif self.m < 1:
            raise ValueError(f"lazy journey must last at least one step, got m={self.m}")
        if self.t_k < self.z_k:
            raise ValueError(f"t_k={self.t_k} below z_k={self.z_k}")
        return self


# ============================================================================
# Statistics
# ============================================================================

class LaplaceEstimate(BaseModel):
    """Empirical Laplace transform at one lambda."""
    lam: float = Field(..., ge=0.0, description="Transform argument")
    estimate: float = Field(..., ge=0.0, le=1.0, description="Sample mean of exp(-lam X)")
    stderr: float = Field(..., ge=0.0, description="Standard error of the mean")
    predicted: Optional[float] = Field(None, description="Limit-law value at lam")


class MomentEstimate(BaseModel):
    """Sample moment with bootstrap error bars."""
    q: float = Field(..., gt=0.0, description="Moment order")
    estimate: float = Field(..., description="Sample mean of X^q")
    stderr: float = Field(..., ge=0.0, description="Bootstrap standard error")
    ci_low: float = Field(..., description="2.5% percentile bootstrap bound")
    ci_high: float = Field(..., description="97.5% percentile bootstrap bound")
    predicted: Optional[float] = Field(None, description="Limit-law moment")


class EnsembleSummary(BaseModel):
    """Aggregate statistics of one checkpoint of an ensemble."""
    t: int = Field(..., ge=1, description="Checkpoint time")
    n_samples: int = Field(..., ge=1, description="Number of walkers")
    nu: float = Field(..., description="Exponent used to scale z")
    median_z: float = Field(..., description="Ensemble median of z")
    mean_z: float = Field(..., description="Ensemble mean of z")
    reference: Optional[str] = Field(None, description="Reference variable (T or L) estimated from z")
    moments: List[MomentEstimate] = Field(default_factory=list)
    laplace: List[LaplaceEstimate] = Field(default_factory=list)
    ks_statistic: Optional[float] = Field(None, description="KS distance of the reference variable")
    ks_critical: Optional[float] = Field(None, description="1% critical value")

    _reference_samples: Optional[np.ndarray] = PrivateAttr(default=None)

    def attach_reference(self, samples: np.ndarray) -> "EnsembleSummary":
        self._reference_samples = np.sort(np.asarray(samples, dtype=float))
        return self

    def ecdf(self, x):
        """Empirical CDF of the reference-variable samples."""
        if self._reference_samples is None:
            raise ValueError("no reference samples attached")
        n = self._reference_samples.size
        return np.searchsorted(self._reference_samples, x, side="right") / n

    @model_validator(mode="after")
    def _check_laplace(self) -> "EnsembleSummary":
        if any(not 0.0 <= row.estimate <= 1.0 for row in self.laplace):
            raise ValueError("Laplace values must lie in [0, 1]")
        return self


class NuEstimate(BaseModel):
    """Scaling exponent fitted from an ensemble."""
    nu_hat: float = Field(..., description="Fitted exponent")
    stderr: float = Field(..., gt=0.0, description="Bootstrap standard error")
    t_min: int = Field(..., ge=1, description="Fit window start")
    t_max: int = Field(..., ge=1, description="Fit window end")
    n_checkpoints: int = Field(..., ge=4, description="Checkpoints in the fit")
    method: Literal["median-slope", "mean-slope"] = Field("median-slope")

    @model_validator(mode="after")
    def _check_window(self) -> "NuEstimate":
        if self.t_max < 10 * self.t_min:
            raise ValueError("fit window must span at least one decade")
        return self


# ============================================================================
# Run configuration and output header
# ============================================================================

class RunConfig(BaseModel):
    """Everything needed to replay a simulation."""
    gamma: float = Field(..., description="Model parameter")
    engine: Engine = Field(Engine.DIRECT, description="Simulation engine")
    t_max: Optional[int] = Field(None, ge=1, le=2 ** 62, description="Time horizon")
    k_max: Optional[int] = Field(None, ge=1, description="Cycle horizon (cycles engine)")
    n_walkers: int = Field(1, ge=1, description="Ensemble size")
    checkpoints: str = Field("geometric:1.7782794100389228", description="geometric:RATIO[:START] or list:T1,T2,...")
    master_seed: int = Field(..., ge=0, description="Master seed of all walker streams")
    threads: int = Field(1, ge=1, description="Worker processes; never affects output")
    output: Optional[str] = Field(None, description="Output path")
    format: OutputFormat = Field(OutputFormat.JSONL, description="Output format")

    @field_validator("checkpoints")
    @classmethod
    def _check_descriptor(cls, value: str) -> str:
        kind, _, rest = value.partition(":")
        if kind not in ("geometric", "list") or not rest:
            raise ValueError(f"invalid checkpoint schedule: {value!r}")
        return value

    @model_validator(mode="after")
    def _check_horizon(self) -> "RunConfig":
        if self.engine == Engine.DIRECT:
            if self.t_max is None or self.k_max is not None:
                raise ValueError("direct engine needs t_max and no k_max")
        elif (self.t_max is None) == (self.k_max is None):
            raise ValueError("cycles engine needs exactly one of t_max / k_max")
        if self.t_max is not None and not self.schedule():
            raise ValueError("checkpoint schedule is empty within t_max")
        return self

    def schedule(self) -> List[int]:
        """Checkpoint times within [1, t_max], sorted and unique."""
        return parse_schedule(self.checkpoints, self.t_max) if self.t_max else []

    @property
    def record_schema(self) -> str:
        return "cycle" if self.k_max is not None else "checkpoint"


class RunHeader(BaseModel):
    """Leading object of every simulation output file."""
    type: Literal["header"] = "header"
    schema_name: Literal["checkpoint", "cycle"] = Field(..., alias="schema")
    version: int = 1
    config: RunConfig
    seed: int

    model_config = ConfigDict(populate_by_name=True)


# ============================================================================
# Verification
# ============================================================================

class CheckResult(BaseModel):
    """Outcome of one verification check."""
    name: str = Field(..., description="Check identifier")
    measured: float = Field(..., description="Measured value")
    expected: float = Field(..., description="Reference value")
    tolerance: float = Field(..., description="Allowed deviation (or threshold)")
    passed: bool = Field(..., description="Whether the check passed")
    detail: str = Field("", description="How the comparison was made")


class SuiteReport(BaseModel):
    """Outcome of one verification suite."""
    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
