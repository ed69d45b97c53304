"""
Copyright 2024 Google LLC

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
"""Random Field Utils Cauchy fields parameter and result models
   2024 Google
"""
# Standard library imports
import math
from typing import List, Literal, Optional, Tuple, Union

# Third-party imports
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

# Local imports
from .exceptions import DimensionMismatch, DomainError


def _check_alpha(value):
    if not (0.0 < value <= 2.0) or not math.isfinite(value):
        raise ValueError("alpha must lie in (0, 2]")
    return value


def _check_beta(value):
    if not (value > 0.0) or not math.isfinite(value):
        raise ValueError("beta must be > 0")
    return value


class KernelParams(BaseModel):
    """Parameters (alpha, beta, n) of an isotropic generalized Cauchy kernel."""
    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float
    dim: int = 1

    @field_validator("alpha")
    @classmethod
    def _alpha_range(cls, value):
        return _check_alpha(value)

    @field_validator("beta")
    @classmethod
    def _beta_range(cls, value):
        return _check_beta(value)

    @field_validator("dim")
    @classmethod
    def _dim_range(cls, value):
        if value < 1:
            raise ValueError("dim must be >= 1")
        return value

    @property
    def margin(self) -> float:
        """alpha*beta - n; nonpositive exactly for long range dependence."""
        return self.alpha * self.beta - self.dim


class SheetParams(BaseModel):
    """Per-axis parameters of a generalized Cauchy sheet."""
    model_config = ConfigDict(frozen=True)

    alphas: Tuple[float, ...]
    betas: Tuple[float, ...]

    @field_validator("alphas")
    @classmethod
    def _alphas_range(cls, value):
        if len(value) == 0:
            raise ValueError("alphas must not be empty")
        for alpha in value:
            _check_alpha(alpha)
        return value

    @field_validator("betas")
    @classmethod
    def _betas_range(cls, value):
        for beta in value:
            _check_beta(beta)
        return value

    @model_validator(mode="after")
    def _equal_lengths(self):
        if len(self.alphas) != len(self.betas):
            raise ValueError(
                f"alphas and betas must have equal lengths, got {len(self.alphas)} and {len(self.betas)}"
            )
        return self

    @property
    def dim(self) -> int:
        return len(self.alphas)

    @property
    def min_alpha(self) -> float:
        return min(self.alphas)

    def min_alpha_axes(self, rel_tol: float = 1e-12) -> List[int]:
        """Indices of the axes attaining min alpha (ties within rel_tol)."""
        low = self.min_alpha
        return [i for i, alpha in enumerate(self.alphas) if alpha - low <= rel_tol * low]

    @property
    def min_alpha_multiplicity(self) -> int:
        return len(self.min_alpha_axes())

    def axis(self, i: int) -> KernelParams:
        """One-dimensional kernel of axis i."""
        return KernelParams(alpha=self.alphas[i], beta=self.betas[i], dim=1)


class QuadratureSpec(BaseModel):
    """Tolerances and truncation of a semi-infinite quadrature."""
    model_config = ConfigDict(frozen=True)

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 500
    truncation_point: float = 40.0
    tail_bound: Optional[float] = None

    @field_validator("rel_tol", "abs_tol", "truncation_point")
    @classmethod
    def _positive(cls, value):
        if not value > 0:
            raise ValueError("quadrature tolerances and truncation point must be > 0")
        return value

    @field_validator("max_subdivisions")
    @classmethod
    def _positive_int(cls, value):
        if value < 1:
            raise ValueError("max_subdivisions must be >= 1")
        return value


class SpectralValue(BaseModel):
    """An evaluated spectral density with its error estimate."""
    model_config = ConfigDict(frozen=True)

    value: float
    est_error: float = 0.0
    method: str = "closed"
    quadrature: Optional[QuadratureSpec] = None

    def __float__(self):
        return self.value


class AsymptoticSeries(BaseModel):
    """Truncated asymptotic expansion of a spectral density.

    The represented expansion is
    [e^{-|w|} if exponential_prefactor] * (sum_k c_k |w|^{e_k} + log_term_coefficient * ln(1/|w|)).
    """
    model_config = ConfigDict(frozen=True)

    regime: Literal["HighFreq", "LowFreq"]
    terms: List[Tuple[float, float]] = []
    log_term_coefficient: float = 0.0
    exponential_prefactor: bool = False
    degenerate: bool = False
    note: str = ""

    @property
    def leading(self) -> Tuple[float, float]:
        return self.terms[0]


class GridSpec(BaseModel):
    """Regular lattice on which a field is sampled."""
    model_config = ConfigDict(frozen=True)

    dim: Literal[1, 2]
    points_per_axis: int
    spacing: Tuple[float, ...]
    seed: int = 0

    @field_validator("spacing", mode="before")
    @classmethod
    def _spacing_tuple(cls, value):
        if isinstance(value, (int, float)):
            return (float(value),)
        return tuple(value)

    @field_validator("points_per_axis")
    @classmethod
    def _power_of_two(cls, value):
        if value < 8 or value & (value - 1):
            raise ValueError("points_per_axis must be a power of two >= 8")
        return value

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return value

    @model_validator(mode="after")
    def _spacing_per_axis(self):
        if len(self.spacing) == 1 and self.dim == 2:
            object.__setattr__(self, "spacing", self.spacing * 2)
        if len(self.spacing) != self.dim:
            raise ValueError("spacing needs one entry per axis")
        if any(not h > 0 for h in self.spacing):
            raise ValueError("spacing must be > 0")
        return self

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.points_per_axis,) * self.dim


class FieldGrid(BaseModel):
    """A sampled realization of a Gaussian field on a regular lattice."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: GridSpec
    values: np.ndarray
    kernel_tag: str
    realization: int = 0

    @model_validator(mode="after")
    def _shape_matches(self):
        if self.values.shape != self.grid.shape:
            raise ValueError(f"values shape {self.values.shape} does not match grid {self.grid.shape}")
        self.values.setflags(write=False)
        return self


class EmbeddingReport(BaseModel):
    """Outcome of the circulant embedding search."""
    model_config = ConfigDict(frozen=True)

    embedding_size: Tuple[int, ...]
    padding_factor: int
    min_eigenvalue: float
    max_eigenvalue: float
    clipped: bool
    clipped_mass: float
    nonnegative: bool


class VariogramFit(BaseModel):
    """Log-log regression of the empirical increment variance."""
    model_config = ConfigDict(frozen=True)

    alpha_hat: float
    beta_hat: float
    dimension_hat: float
    r_squared: float
    lags_used: List[float]
    alpha_clamped: bool = False


class DependenceVerdict(BaseModel):
    """Long/short range dependence classification and its margin."""
    model_config = ConfigDict(frozen=True)

    verdict: Literal["LRD", "SRD"]
    margin: float

    @model_validator(mode="after")
    def _consistent(self):
        if (self.verdict == "LRD") != (self.margin <= 0):
            raise ValueError("verdict must be LRD exactly when margin <= 0")
        return self


class IntegralWitness(BaseModel):
    """Partial covariance integral up to a radius, with the convergent limit when it exists."""
    model_config = ConfigDict(frozen=True)

    radius: float
    partial: float
    limit: Optional[float] = None


class LampertiParams(BaseModel):
    """Hurst exponent(s) and base kernel of a Lamperti transformation."""
    model_config = ConfigDict(frozen=True)

    mode: Literal["FirstSS", "SecondMSS"]
    H: Union[float, Tuple[float, ...]]
    base: Union[KernelParams, SheetParams]

    @model_validator(mode="after")
    def _hurst_shape(self):
        hurst = self.H if isinstance(self.H, tuple) else (self.H,)
        if any(not h > 0 for h in hurst):
            raise ValueError("H must be > 0")
        if self.mode == "FirstSS" and isinstance(self.H, tuple):
            raise ValueError("the first transform takes a scalar H")
        if self.mode == "SecondMSS":
            if not isinstance(self.H, tuple):
                object.__setattr__(self, "H", (float(self.H),) * self.base.dim)
            elif len(self.H) != self.base.dim:
                raise ValueError("H needs one entry per axis of the base kernel")
        return self

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def is_sheet(self) -> bool:
        return isinstance(self.base, SheetParams)

    def hurst_vector(self) -> np.ndarray:
        if self.mode == "FirstSS":
            return np.full(self.dim, float(self.H))
        return np.asarray(self.H, dtype=float)


def euclidean_norm(vector) -> float:
    """Euclidean norm with overflow-safe accumulation."""
    return math.hypot(*(float(x) for x in vector))


def as_vector(values, name: str = "vector") -> np.ndarray:
    """Converts a lag, frequency or point given as scalar or sequence to a 1-D float array."""
    vector = np.atleast_1d(np.asarray(values, dtype=float))
    if vector.ndim != 1:
        raise DimensionMismatch(f"{name} must be one-dimensional, got shape {vector.shape}")
    return vector


def as_lag(values, dim: Optional[int] = None, name: str = "lag") -> np.ndarray:
    vector = as_vector(values, name)
    if dim is not None and vector.size != dim:
        raise DimensionMismatch(f"{name} has {vector.size} components, expected {dim}")
    return vector


def as_positive_point(values, dim: Optional[int] = None, name: str = "point") -> np.ndarray:
    vector = as_lag(values, dim, name)
    if np.any(vector <= 0):
        raise DomainError(f"{name} must have strictly positive coordinates, got {vector.tolist()}")
    return vector


def same_dim(u, v, names=("u", "v")):
    if u.size != v.size:
        raise DimensionMismatch(f"{names[0]} and {names[1]} differ in dimension: {u.size} != {v.size}")


class GrowthCheck(BaseModel):
    """Decade-increment test of whether a sampled quantity keeps growing."""
    model_config = ConfigDict(frozen=True)

    diverges: bool
    points: List[float]
    values: List[float]
    last_ratio: float
    # extrapolated decay exponent of the increments, when estimated
    exponent: Optional[float] = None
    # closed-form limit of a convergent quantity
    limit: Optional[float] = None
