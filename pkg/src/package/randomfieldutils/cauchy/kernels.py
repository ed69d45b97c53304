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
"""Random Field Utils Cauchy fields covariance kernels
   2024 Google
"""
# Standard library imports
import math
from typing import Sequence

# Third-party imports
import numpy as np

# Local imports
from .exceptions import DimensionMismatch, DomainError
from .params import KernelParams, SheetParams, as_lag, euclidean_norm, same_dim


def _log1p_power(r: float, alpha: float) -> float:
    """ln(1 + |r|^alpha), finite for lags whose power overflows."""
    r = abs(float(r))
    if r <= 1.0:
        return math.log1p(r ** alpha)
    return alpha * math.log(r) + math.log1p(r ** -alpha)


def _cauchy_factor(r: float, alpha: float, beta: float) -> float:
    if r == 0:
        return 1.0
    return math.exp(-beta * _log1p_power(r, alpha))


def cauchy_complement(r: float, alpha: float, beta: float) -> float:
    """1 - (1 + |r|^alpha)^(-beta) without cancellation at small lags."""
    if r == 0:
        return 0.0
    return -math.expm1(-beta * _log1p_power(r, alpha))


def lag_norm(p: KernelParams, tau) -> float:
    """Euclidean norm of a lag for an isotropic kernel.

    A single component is read as the norm itself, so scalar lags work in any dimension.
    """
    lag = as_lag(tau)
    if lag.size not in (1, p.dim):
        raise DimensionMismatch(f"lag has {lag.size} components, kernel has dimension {p.dim}")
    return euclidean_norm(lag)


def cauchy_correlation(r, alpha: float, beta: float) -> np.ndarray:
    """Vectorised radial generalized Cauchy correlation (1 + |r|^alpha)^(-beta)."""
    r = np.abs(np.asarray(r, dtype=float))
    return np.exp(-beta * np.log1p(r ** alpha))


def powered_exp_correlation(r, alpha: float, beta: float) -> np.ndarray:
    """Vectorised radial powered exponential correlation exp(-beta |r|^alpha)."""
    r = np.abs(np.asarray(r, dtype=float))
    return np.exp(-beta * r ** alpha)


def gfgcc_cov(p: KernelParams, tau) -> float:
    """Covariance (1 + ||tau||^alpha)^(-beta) of the isotropic field.

    Args:
        p (KernelParams): Kernel parameters.
        tau: Lag vector, or its norm.

    Returns:
        float: Covariance in (0, 1], exactly 1 at tau = 0.
    """
    return _cauchy_factor(lag_norm(p, tau), p.alpha, p.beta)


def gsgcc_cov(p: SheetParams, tau) -> float:
    """Separable sheet covariance prod_i (1 + |tau_i|^alpha_i)^(-beta_i).

    Raises:
        DimensionMismatch: If tau has a different number of components than p.
    """
    lag = as_lag(tau, p.dim)
    value = 1.0
    for x, alpha, beta in zip(lag, p.alphas, p.betas):
        value *= _cauchy_factor(abs(float(x)), alpha, beta)
    return value


def powered_exp_cov(p: KernelParams, tau) -> float:
    """Powered exponential comparison kernel exp(-beta ||tau||^alpha)."""
    r = lag_norm(p, tau)
    if r == 0:
        return 1.0
    return math.exp(-p.beta * r ** p.alpha)


def levy_fbf_cov(H: float, u, v) -> float:
    """Covariance of the Levy fractional Brownian field of index H.

    Index 1 is accepted because it is the tangent field of the alpha = 2 kernel.
    """
    if not 0 < H <= 1:
        raise DomainError(f"levy_fbf_cov needs H in (0, 1], got {H}")
    u, v = as_lag(u, name="u"), as_lag(v, name="v")
    same_dim(u, v)
    two_h = 2.0 * H
    return 0.5 * (
        euclidean_norm(u) ** two_h + euclidean_norm(v) ** two_h - euclidean_norm(u - v) ** two_h
    )


def fbs_cov(H: Sequence[float], t, s) -> float:
    """Covariance of the fractional Brownian sheet with per-axis indices H.

    Returns prod_i (1/2)(|t_i|^{2H_i} + |s_i|^{2H_i} - |t_i - s_i|^{2H_i}).
    """
    hurst = as_lag(H, name="H")
    t, s = as_lag(t, hurst.size, "t"), as_lag(s, hurst.size, "s")
    if np.any(hurst <= 0) or np.any(hurst > 1):
        raise DomainError(f"fbs_cov needs every H_i in (0, 1], got {hurst.tolist()}")
    value = 1.0
    for h, ti, si in zip(hurst, np.abs(t), np.abs(s)):
        two_h = 2.0 * h
        value *= 0.5 * (ti ** two_h + si ** two_h - abs(ti - si) ** two_h)
    return float(value)


def local_expansion_error(p: KernelParams, tau) -> float:
    """Remainder C(tau) - (1 - beta ||tau||^alpha) of the small-lag expansion.

    Raises:
        DomainError: If ||tau|| >= 1.
    """
    r = lag_norm(p, tau)
    if r >= 1:
        raise DomainError(f"local expansion holds for ||tau|| < 1, got {r}")
    return p.beta * r ** p.alpha - cauchy_complement(r, p.alpha, p.beta)


def increment_cov(p: KernelParams, eps: float, u, v) -> float:
    """Covariance of the increments X(t + eps u) - X(t) and X(t + eps v) - X(t)."""
    u, v = as_lag(u, name="u"), as_lag(v, name="v")
    same_dim(u, v)
    return (
        cauchy_complement(euclidean_norm(eps * u), p.alpha, p.beta)
        + cauchy_complement(euclidean_norm(eps * v), p.alpha, p.beta)
        - cauchy_complement(euclidean_norm(eps * (u - v)), p.alpha, p.beta)
    )


def total_increment_cov(p: SheetParams, eps: float, u, v) -> float:
    """Covariance of the total increments of the sheet over eps*u and eps*v.

    Uses the per-axis product prod_i [C(0) - C(eps u_i) - C(eps v_i) + C(eps (u_i - v_i))].
    """
    u, v = as_lag(u, p.dim, "u"), as_lag(v, p.dim, "v")
    value = 1.0
    for i in range(p.dim):
        alpha, beta = p.alphas[i], p.betas[i]
        value *= (
            cauchy_complement(eps * u[i], alpha, beta)
            + cauchy_complement(eps * v[i], alpha, beta)
            - cauchy_complement(eps * (u[i] - v[i]), alpha, beta)
        )
    return value


def gsgcc_increment_variance(p: SheetParams, t, s) -> float:
    """E[(X(t) - X(s))^2] = 2 - 2 C(t - s) for the unit-variance sheet."""
    t, s = as_lag(t, p.dim, "t"), as_lag(s, p.dim, "s")
    return 2.0 * sheet_complement(p, t - s)


def sheet_complement(p: SheetParams, lag: np.ndarray) -> float:
    """1 - prod_i C_i(lag_i) for the sheet, without cancellation at small lags."""
    log_cov = sum(
        -beta * _log1p_power(x, alpha) for x, alpha, beta in zip(lag, p.alphas, p.betas)
    )
    return -math.expm1(log_cov)


def sheet_increment_cov(p: SheetParams, eps: float, u, v) -> float:
    """Covariance of the ordinary increments X(t + eps u) - X(t) and X(t + eps v) - X(t) of the sheet."""
    u, v = as_lag(u, p.dim, "u"), as_lag(v, p.dim, "v")
    return (
        sheet_complement(p, eps * u)
        + sheet_complement(p, eps * v)
        - sheet_complement(p, eps * (u - v))
    )


def gram_matrix(p: KernelParams, points) -> np.ndarray:
    """Covariance matrix of the isotropic kernel on a point set of shape (m, n)."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.shape[1] != p.dim:
        raise DimensionMismatch(f"points have dimension {points.shape[1]}, kernel has {p.dim}")
    diff = points[:, None, :] - points[None, :, :]
    return cauchy_correlation(np.sqrt(np.sum(diff ** 2, axis=-1)), p.alpha, p.beta)
