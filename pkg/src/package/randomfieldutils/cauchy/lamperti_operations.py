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
"""Random Field Utils Cauchy fields Lamperti transformation operations
   2024 Google
"""
# Standard library imports
import logging
import math
import pkgutil
from typing import Tuple

# Third-party imports
import numpy as np
import toml
from scipy import integrate

# Local imports
from . import kernels
from .exceptions import DomainError, PreconditionError
from .params import (
    FieldGrid,
    GrowthCheck,
    LampertiParams,
    SheetParams,
    as_lag,
    as_positive_point,
    euclidean_norm,
)

# Load constants
constants = toml.loads(pkgutil.get_data(__name__, "constants.toml").decode())
# Logger
logger = logging.getLogger(constants["LOGGING"]["FIELDS_LOGGER"])


def _log_weight(L: LampertiParams, t: np.ndarray) -> float:
    """ln of the weight ||t||^H (first transform) or prod t_i^{H_i} (second transform)."""
    if L.mode == "FirstSS":
        return L.H * math.log(euclidean_norm(t))
    return float(np.dot(L.hurst_vector(), np.log(t)))


def _stationary_cov(base, lag: np.ndarray) -> float:
    if isinstance(base, SheetParams):
        return kernels.gsgcc_cov(base, lag)
    return kernels.gfgcc_cov(base, lag)


def _stationary_complement(base, lag: np.ndarray) -> float:
    if isinstance(base, SheetParams):
        return kernels.sheet_complement(base, lag)
    return kernels.cauchy_complement(euclidean_norm(lag), base.alpha, base.beta)


def _log_lag(t: np.ndarray, s: np.ndarray) -> np.ndarray:
    return np.log(t) - np.log(s)


def remainder_exponent(L: LampertiParams) -> float:
    """delta = min over axes of {2 - alpha_i, alpha_i, 1}; reported only."""
    alphas = L.base.alphas if L.is_sheet else (L.base.alpha,)
    return min(min(2.0 - a, a, 1.0) for a in alphas)


class LampertiOperations:
    """Self-similar and multi-self-similar fields obtained from stationary generalized Cauchy fields."""

    def __init__(self, client):
        """Initialize with reference to main client."""
        self._client = client

    def _points(self, L: LampertiParams, *points):
        return [as_positive_point(x, L.dim, name) for x, name in zip(points, ("t", "s"))]

    def _require(self, L: LampertiParams, mode: str, sheet: bool):
        if L.mode != mode or L.is_sheet != sheet:
            kind = "GSGCC" if sheet else "GFGCC"
            raise PreconditionError(f"operation needs mode {mode} with a {kind} base, got {L.mode}")

    def covariance(self, L: LampertiParams, t, s) -> float:
        """Covariance w(t) w(s) K(ln t - ln s) of the transformed field, for any mode and base."""
        t, s = self._points(L, t, s)
        return math.exp(_log_weight(L, t) + _log_weight(L, s)) * _stationary_cov(L.base, _log_lag(t, s))

    def yss_cov(self, L: LampertiParams, t, s) -> float:
        """H-self-similar field from the first transform of the isotropic field.

        ||t||^H ||s||^H [1 + (sum_i (ln t_i - ln s_i)^2)^{alpha/2}]^{-beta}.

        Raises:
            DomainError: If a coordinate is not positive.
        """
        self._require(L, "FirstSS", sheet=False)
        return self.covariance(L, t, s)

    def yss_sheet_cov(self, L: LampertiParams, t, s) -> float:
        """First transform of the sheet: ||t||^H ||s||^H prod_i [1 + |ln t_i - ln s_i|^{alpha_i}]^{-beta_i}."""
        self._require(L, "FirstSS", sheet=True)
        return self.covariance(L, t, s)

    def ymss_cov(self, L: LampertiParams, t, s) -> float:
        """Multi-self-similar field from the second transform of the isotropic field."""
        self._require(L, "SecondMSS", sheet=False)
        return self.covariance(L, t, s)

    def ymss_sheet_cov(self, L: LampertiParams, t, s) -> float:
        """Second transform of the sheet; separable across axes."""
        self._require(L, "SecondMSS", sheet=True)
        return self.covariance(L, t, s)

    def increment_variance(self, L: LampertiParams, t, s) -> float:
        """E[(Y(t) - Y(s))^2] written as (w(t) - w(s))^2 + 2 w(t) w(s) (1 - K) to avoid cancellation."""
        t, s = self._points(L, t, s)
        log_wt, log_ws = _log_weight(L, t), _log_weight(L, s)
        weight_gap = math.exp(log_ws) * math.expm1(log_wt - log_ws)
        return weight_gap ** 2 + 2.0 * math.exp(log_wt + log_ws) * _stationary_complement(
            L.base, _log_lag(t, s)
        )

    def lamperti_correlation(self, L: LampertiParams, t, tau) -> float:
        """Correlation of Y(t + tau) and Y(t): K(ln(1 + tau/t)), free of H.

        Raises:
            DomainError: If t has a nonpositive coordinate or tau a negative one.
        """
        (t,) = self._points(L, t)
        tau = as_lag(tau, L.dim, "tau")
        if np.any(tau < 0):
            raise DomainError(f"correlation is defined for tau with nonnegative components, got {tau.tolist()}")
        return _stationary_cov(L.base, np.log1p(tau / t))

    def lamperti_lrd_witness(self, L: LampertiParams, t, V: float) -> float:
        """prod t_i times the integral over [0, V]^n of K(v) prod_i e^{v_i}.

        Raises:
            DomainError: If V < 0 or t has a nonpositive coordinate.
        """
        try:
            (t,) = self._points(L, t)
            if V < 0:
                raise DomainError(f"witness extent must be nonnegative, got {V}")
            if V == 0:
                return 0.0
            scale = float(np.prod(t))
            base = L.base
            if isinstance(base, SheetParams):
                integral = 1.0
                for alpha, beta in zip(base.alphas, base.betas):
                    integral *= integrate.quad(
                        lambda v: math.exp(v - beta * math.log1p(v ** alpha)), 0.0, V
                    )[0]
                return scale * integral

            def integrand(*v):
                return math.exp(sum(v) - base.beta * math.log1p(euclidean_norm(v) ** base.alpha))

            if base.dim == 1:
                integral = integrate.quad(integrand, 0.0, V)[0]
            else:
                integral = integrate.nquad(integrand, [[0.0, V]] * base.dim)[0]
            return scale * integral
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def lamperti_growth_verdict(self, L: LampertiParams, t) -> GrowthCheck:
        """Ratio test on the witness integral over doubling cube edges."""
        extents = constants["REGIMES"]["WITNESS_EXTENTS"]
        values = [self.lamperti_lrd_witness(L, t, V) for V in extents]
        increments = np.diff(values)
        last_ratio = float(increments[-1] / increments[-2])
        diverges = bool(
            np.all(increments > 0) and last_ratio >= constants["REGIMES"]["GROWTH_RATIO_THRESHOLD"]
        )
        return GrowthCheck(diverges=diverges, points=extents, values=values, last_ratio=last_ratio)

    def increment_var_expansion(self, L: LampertiParams, t, tau) -> Tuple[float, float]:
        """Exact increment variance over [t, t + tau] and its small-lag leading term.

        Leading terms:
            isotropic base: 2 beta w(t)^2 (sum_i (tau_i/t_i)^2)^{alpha/2}
            sheet base:     2 w(t)^2 sum_i beta_i |tau_i/t_i|^{alpha_i}
        with w(t)^2 = ||t||^{2H} or prod t_i^{2H_i}.
        """
        (t,) = self._points(L, t)
        tau = as_lag(tau, L.dim, "tau")
        exact = self.increment_variance(L, t + tau, t)
        weight_sq = math.exp(2.0 * _log_weight(L, t))
        relative = tau / t
        base = L.base
        if isinstance(base, SheetParams):
            leading = 2.0 * weight_sq * sum(
                beta * abs(r) ** alpha for r, alpha, beta in zip(relative, base.alphas, base.betas)
            )
        else:
            leading = 2.0 * base.beta * weight_sq * euclidean_norm(relative) ** base.alpha
        return exact, leading

    def total_increment_var_mss_sheet(self, L: LampertiParams, t, tau) -> Tuple[float, float]:
        """Total-increment variance of the second transform of the sheet and its leading term.

        The covariance factorizes over axes, so the 2^n-term signed sum is the product of
        per-axis increment variances. The leading term is 2^n prod_i beta_i t_i^{2H_i - alpha_i} |tau_i|^{alpha_i},
        free of t when alpha = 2H.
        """
        self._require(L, "SecondMSS", sheet=True)
        (t,) = self._points(L, t)
        tau = as_lag(tau, L.dim, "tau")
        as_positive_point(t + tau, L.dim, "t + tau")
        hurst = L.hurst_vector()
        exact, leading = 1.0, 1.0
        for i in range(L.dim):
            axis = LampertiParams(
                mode="SecondMSS",
                H=(float(hurst[i]),),
                base=SheetParams(alphas=(L.base.alphas[i],), betas=(L.base.betas[i],)),
            )
            exact *= self.increment_variance(axis, t[i] + tau[i], t[i])
            alpha, beta = L.base.alphas[i], L.base.betas[i]
            leading *= 2.0 * beta * t[i] ** (2.0 * hurst[i] - alpha) * abs(tau[i]) ** alpha
        return exact, leading

    def lamperti_tangent_cov(self, L: LampertiParams, t, u, v) -> float:
        """Tangent-field covariance of the transformed field at t.

        w(t)^2 times the tangent covariance of the base evaluated at (u_i/t_i) and (v_i/t_i).
        """
        (t,) = self._points(L, t)
        u, v = as_lag(u, L.dim, "u") / t, as_lag(v, L.dim, "v") / t
        weight_sq = math.exp(2.0 * _log_weight(L, t))
        analysis = self._client._analysis_ops
        if L.is_sheet:
            return weight_sq * analysis.tangent_cov_gsgcc(L.base, u, v)
        return weight_sq * analysis.tangent_cov_gfgcc(L.base, u, v)

    def tangent_ratio(self, L: LampertiParams, t, u, v, eps: float) -> float:
        """Normalized increment covariance at scale eps, by polarization of increment variances."""
        (t,) = self._points(L, t)
        u, v = as_lag(u, L.dim, "u"), as_lag(v, L.dim, "v")
        order = L.base.min_alpha if L.is_sheet else L.base.alpha
        covariance = 0.5 * (
            self.increment_variance(L, t + eps * u, t)
            + self.increment_variance(L, t + eps * v, t)
            - self.increment_variance(L, t + eps * u, t + eps * v)
        )
        return covariance / eps ** order

    def levy_inverse_cov(self, H: float, t, tau) -> float:
        """Covariance of Z(t + tau) and Z(t), Z the inverse first transform of the Levy fractional Brownian field.

        Z(x) = ||e^x||^{-H} B_H(e^x); stationary only for n = 1.
        """
        t = as_lag(t, name="t")
        tau = as_lag(tau, t.size, "tau")
        a, b = np.exp(t + tau), np.exp(t)
        return (euclidean_norm(a) * euclidean_norm(b)) ** (-H) * kernels.levy_fbf_cov(H, a, b)

    def _log_grid(self, field: FieldGrid, origin: float):
        g = field.grid
        axes = [origin + g.spacing[i] * np.arange(g.points_per_axis) for i in range(g.dim)]
        return np.meshgrid(*axes, indexing="ij") if g.dim == 2 else axes

    def _log_weights(self, mode: str, H, coordinates) -> np.ndarray:
        if mode == "FirstSS":
            # ln ||e^x||^H = (H/2) ln sum_i e^{2 x_i}
            return 0.5 * H * np.logaddexp.reduce([2.0 * x for x in coordinates], axis=0)
        hurst = np.broadcast_to(np.asarray(H, dtype=float), (len(coordinates),))
        return sum(h * x for h, x in zip(hurst, coordinates))

    def transform_field(self, field: FieldGrid, L: LampertiParams, origin: float = 0.0) -> FieldGrid:
        """Re-weights a stationary sample on the lattice x into a sample of Y at t = e^x.

        The returned grid keeps the log-coordinate lattice; values are Y(e^x).
        """
        if field.grid.dim != L.dim:
            raise PreconditionError(f"field dimension {field.grid.dim} does not match {L.dim}")
        coordinates = self._log_grid(field, origin)
        values = np.exp(self._log_weights(L.mode, L.H, coordinates)) * field.values
        return FieldGrid(
            grid=field.grid,
            values=values,
            kernel_tag=f"{L.mode}(H={L.H}) of {field.kernel_tag}",
            realization=field.realization,
        )

    def inverse_first(self, field: FieldGrid, H: float, origin: float = 0.0) -> FieldGrid:
        """X(x) = (sum_i e^{2 x_i})^{-H/2} Y(e^x) on the log-coordinate lattice."""
        coordinates = self._log_grid(field, origin)
        values = np.exp(-self._log_weights("FirstSS", H, coordinates)) * field.values
        return FieldGrid(grid=field.grid, values=values, kernel_tag=f"inverse FirstSS of {field.kernel_tag}",
                         realization=field.realization)

    def inverse_second(self, field: FieldGrid, H, origin: float = 0.0) -> FieldGrid:
        """X(x) = e^{-sum_i x_i H_i} Y(e^x) on the log-coordinate lattice."""
        coordinates = self._log_grid(field, origin)
        values = np.exp(-self._log_weights("SecondMSS", H, coordinates)) * field.values
        return FieldGrid(grid=field.grid, values=values, kernel_tag=f"inverse SecondMSS of {field.kernel_tag}",
                         realization=field.realization)
