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
"""Random Field Utils Cauchy fields spectral density operations
   2024 Google
"""
# Standard library imports
import logging
import math
import pkgutil
from typing import List, Literal, Optional

# Third-party imports
import mpmath
import numpy as np
import toml
from scipy import integrate, special

# Local imports
from . import specfun
from .exceptions import ConvergenceError, DomainError, PreconditionError
from .params import (
    AsymptoticSeries,
    GrowthCheck,
    KernelParams,
    QuadratureSpec,
    SheetParams,
    SpectralValue,
    as_lag,
    euclidean_norm,
)

# Load constants
constants = toml.loads(pkgutil.get_data(__name__, "constants.toml").decode())
# Logger
logger = logging.getLogger(constants["LOGGING"]["FIELDS_LOGGER"])

LowFreqRegime = Literal["subcritical", "critical", "supercritical"]

_LOG_MAX = math.log(np.finfo(float).max)


def frequency_norm(dim: int, omega) -> float:
    """Norm of a frequency vector; a single component is read as the norm."""
    frequency = as_lag(omega, name="omega")
    if frequency.size not in (1, dim):
        raise DomainError(f"frequency has {frequency.size} components, kernel has dimension {dim}")
    return euclidean_norm(frequency)


def low_freq_regime(p: KernelParams) -> LowFreqRegime:
    """Regime of the low-frequency behavior, with alpha*beta = n detected within tolerance."""
    margin = p.alpha * p.beta - p.dim
    if abs(margin) <= constants["REGIMES"]["CRITICAL_TOLERANCE"] * p.dim:
        return "critical"
    return "subcritical" if margin < 0 else "supercritical"


def evaluate_truncated(series: AsymptoticSeries, omega, m: Optional[int] = None) -> float:
    """Sums the first m terms of an asymptotic series at |omega|.

    Args:
        series (AsymptoticSeries): The expansion.
        omega: Frequency (vector or norm), nonzero.
        m (int, optional): Number of algebraic terms to keep; all when None.

    Returns:
        float: The truncated sum, including the log term and exponential prefactor.
    """
    w = euclidean_norm(as_lag(omega, name="omega"))
    if not w > 0:
        raise DomainError("asymptotic series are evaluated at nonzero frequencies")
    terms = series.terms if m is None else series.terms[:m]
    total = math.fsum(c * w ** e for c, e in terms)
    if series.log_term_coefficient:
        total += series.log_term_coefficient * math.log(1.0 / w)
    if series.exponential_prefactor:
        total *= math.exp(-w)
    return total


def least_term_count(series: AsymptoticSeries, omega) -> int:
    """Number of leading terms kept when truncating just before the smallest term."""
    w = euclidean_norm(as_lag(omega, name="omega"))
    magnitudes = [abs(c) * w ** e for c, e in series.terms]
    for k in range(1, len(magnitudes)):
        if magnitudes[k] >= magnitudes[k - 1]:
            return k
    return len(magnitudes)


def decay_exponent(increments: List[float], alpha: float) -> float:
    """Power-law exponent m of decade increments that behave like 10^(-m k).

    Each pair of successive increments gives the estimate -log10(I[k+1] / I[k]),
    offset by a correction that shrinks by 10^-alpha per decade; the last two
    estimates are extrapolated to remove it.

    Returns:
        float: The exponent; inf when one of the last three increments is not positive.
    """
    tail = np.asarray(increments[-3:], dtype=float)
    if tail.size < 3 or np.any(tail <= 0):
        return math.inf
    estimates = -np.log10(tail[1:] / tail[:-1])
    damping = 10.0 ** -alpha
    return float((estimates[1] - damping * estimates[0]) / (1.0 - damping))


def _quad(f, a, b, q: QuadratureSpec, epsabs: Optional[float] = None, **kwargs):
    epsabs = q.abs_tol if epsabs is None else epsabs
    result = integrate.quad(
        f, a, b, epsabs=epsabs, epsrel=q.rel_tol, limit=q.max_subdivisions, full_output=1, **kwargs
    )
    value, error = result[0], result[1]
    if len(result) > 3:
        tolerance = max(epsabs, q.rel_tol * abs(value))
        if not error <= constants["QUADRATURE"]["ERROR_SLACK"] * tolerance:
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] stopped with error estimate {error:.3e}: {result[3]}",
                value=value,
                error_estimate=error,
            )
        logger.debug(f"Quadrature on [{a}, {b}] accepted with warning, error {error:.3e}.")
    return value, error


def _contour_tail_majorant(p: KernelParams, w: float, cutoff: float) -> float:
    """Bound on |integral over [cutoff, inf)| of the scaled contour integrand."""
    n = p.dim
    nu = abs((n - 2) / 2)
    # sqrt(x) e^x K_nu(x) is monotone with limit sqrt(pi/2)
    k_bound = max(special.kve(nu, cutoff) * math.sqrt(cutoff), math.sqrt(math.pi / 2))
    order = (n + 1) / 2
    bessel_tail = k_bound * special.gamma(order) * special.gammaincc(order, cutoff)
    g_bound = 1.0 if p.alpha <= 1 else special.sindg(90.0 * p.alpha) ** (-p.beta)
    s = (cutoff / w) ** p.alpha
    if s > 1:
        g_bound = min(g_bound, (s - 1.0) ** (-p.beta))
    return bessel_tail * g_bound


class SpectralOperations:
    """Spectral density evaluation for generalized Cauchy fields and sheets."""

    def __init__(self, client):
        """Initialize with reference to main client."""
        self._client = client

    def _quadrature(self, q: Optional[QuadratureSpec]) -> QuadratureSpec:
        if q is not None:
            return q
        return self._client._client_options.quadrature_spec()

    def _origin_value(self, p: KernelParams) -> SpectralValue:
        if low_freq_regime(p) != "supercritical":
            raise DomainError(
                f"spectral density diverges at the origin when alpha*beta <= n "
                f"(alpha={p.alpha}, beta={p.beta}, n={p.dim})"
            )
        value = self.low_freq_leading(p).terms[0][0]
        return SpectralValue(value=value, est_error=0.0, method="limit")

    def spectral_closed_alpha2(self, p: KernelParams, omega) -> SpectralValue:
        """Closed-form spectral density of the alpha = 2 kernel.

        S(w) = |w|^{beta-n/2} K_{n/2-beta}(|w|) / (2^{n/2+beta-1} pi^{n/2} Gamma(beta)).

        Args:
            p (KernelParams): Kernel with alpha = 2.
            omega: Frequency vector or its norm.

        Returns:
            SpectralValue: The density; the finite origin limit when alpha*beta > n.

        Raises:
            PreconditionError: If alpha != 2.
            DomainError: At the origin when alpha*beta <= n.
        """
        try:
            if p.alpha != 2.0:
                raise PreconditionError(f"closed form needs alpha = 2, got {p.alpha}")
            w = frequency_norm(p.dim, omega)
            if w == 0:
                return self._origin_value(p)
            n, beta = p.dim, p.beta
            # K is taken exponentially scaled so large |w| underflows only at the very end
            log_value = (
                (beta - n / 2) * math.log(w)
                - (n / 2 + beta - 1) * math.log(2.0)
                - (n / 2) * math.log(math.pi)
                - specfun.log_gamma(beta)
                + math.log(specfun.bessel_k_scaled(n / 2 - beta, w))
                - w
            )
            return SpectralValue(value=math.exp(log_value), est_error=0.0, method="closed")
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def spectral_contour(self, p: KernelParams, omega, q: QuadratureSpec = None) -> SpectralValue:
        """Spectral density for alpha < 2 from the Bessel-K contour integral.

        With x = |w| u the representation becomes
        S(w) = -|w|^{-n} / (2^{(n-2)/2} pi^{(n+2)/2}) Im int_0^inf K_{(n-2)/2}(x) x^{n/2} g(x/|w|) dx,
        g(u) = (1 + e^{i pi alpha/2} u^alpha)^{-beta}. The integral is split at decades
        starting from x = |w| and truncated at a point X that is doubled until an
        analytic bound on the discarded tail meets the tolerance.

        Args:
            p (KernelParams): Kernel with alpha < 2.
            omega: Nonzero frequency vector or its norm.
            q (QuadratureSpec, optional): Tolerances; client defaults when None.

        Returns:
            SpectralValue: Value, total error estimate (quadrature plus tail) and the
            quadrature settings actually used.

        Raises:
            PreconditionError: If alpha = 2.
            DomainError: At the origin.
            ConvergenceError: If the subdivision or truncation limits are exhausted.
        """
        try:
            q = self._quadrature(q)
            if not p.alpha < 2:
                raise PreconditionError("contour representation needs alpha < 2; use the closed form")
            w = frequency_norm(p.dim, omega)
            if w == 0:
                raise DomainError("contour representation is not defined at the origin")
            n, alpha, beta = p.dim, p.alpha, p.beta
            nu = (n - 2) / 2
            prefactor = w ** (-n) / (2.0 ** nu * math.pi ** ((n + 2) / 2))

            def integrand(x):
                return (
                    specfun.bessel_k(nu, x)
                    * x ** (n / 2)
                    * specfun.complex_pow_denominator(x / w, alpha, beta).imag
                )

            epsabs = q.abs_tol / prefactor
            cutoff = q.truncation_point
            total, error = self._integrate_decades(integrand, 0.0, cutoff, w, q, epsabs)
            for _ in range(constants["QUADRATURE"]["MAX_TRUNCATION_DOUBLINGS"] + 1):
                tail = prefactor * _contour_tail_majorant(p, w, cutoff)
                value = -prefactor * total
                if tail <= max(q.abs_tol, q.rel_tol * abs(value)):
                    break
                piece, piece_error = _quad(integrand, cutoff, 2 * cutoff, q, epsabs)
                total += piece
                error += piece_error
                cutoff *= 2
            else:
                raise ConvergenceError(
                    f"tail bound {tail:.3e} above tolerance at truncation point {cutoff}",
                    value=value,
                    error_estimate=tail,
                )
            est_error = prefactor * error + tail
            if value < 0 and -value <= est_error:
                value = 0.0
            logger.debug(
                f"Contour quadrature at |omega|={w}: truncation {cutoff}, tail {tail:.3e}, error {est_error:.3e}."
            )
            used = q.model_copy(update={"truncation_point": cutoff, "tail_bound": tail})
            return SpectralValue(value=value, est_error=est_error, method="contour", quadrature=used)
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def _integrate_decades(self, f, a, b, start, q, epsabs):
        points = [a]
        mark = start
        while mark < b:
            if mark > a:
                points.append(mark)
            mark *= 10.0
        points.append(b)
        total, error = 0.0, 0.0
        for lo, hi in zip(points[:-1], points[1:]):
            piece, piece_error = _quad(f, lo, hi, q, epsabs)
            total += piece
            error += piece_error
        return total, error

    def spectral_hankel(self, p: KernelParams, omega, q: QuadratureSpec = None) -> SpectralValue:
        """Spectral density from the Hankel transform of the covariance.

        Cross-validation path, valid when alpha*beta > (n-1)/2. For n = 1 and n = 3 the
        Bessel function is elementary and the Fourier-weighted quadrature of QUADPACK is
        used; other dimensions integrate J_{(n-2)/2} with mpmath's oscillatory quadrature.

        Raises:
            PreconditionError: If alpha*beta <= (n-1)/2.
            DomainError: At the origin.
            ConvergenceError: If the oscillatory quadrature fails.
        """
        try:
            q = self._quadrature(q)
            n, alpha, beta = p.dim, p.alpha, p.beta
            if not alpha * beta > (n - 1) / 2:
                raise PreconditionError(
                    f"Hankel representation needs alpha*beta > (n-1)/2, got {alpha * beta} with n={n}"
                )
            w = frequency_norm(n, omega)
            if w == 0:
                raise DomainError("Hankel representation is evaluated at nonzero frequencies")

            def covariance(t):
                return math.exp(-beta * math.log1p(t ** alpha))

            if n == 1:
                integral, error = _quad(covariance, 0.0, np.inf, q, q.rel_tol, weight="cos", wvar=w)
                scale = 1.0 / math.pi
            elif n == 3:
                integral, error = _quad(
                    lambda t: t * covariance(t), 0.0, np.inf, q, q.rel_tol, weight="sin", wvar=w
                )
                scale = 1.0 / (2.0 * math.pi ** 2 * w)
            else:
                digits = constants["QUADRATURE"]["HANKEL_WORKING_DIGITS"]
                integral = self._mp_hankel(p, w, digits)
                error = abs(self._mp_hankel(p, w, digits + 10) - integral)
                scale = w ** ((2 - n) / 2) / (2 * math.pi) ** (n / 2)
            value = scale * integral
            return SpectralValue(value=value, est_error=scale * error, method="hankel", quadrature=q)
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def _mp_hankel(self, p: KernelParams, w: float, digits: int) -> float:
        ctx = mpmath.MPContext()
        ctx.dps = digits
        nu = ctx.mpf(p.dim - 2) / 2
        half_n = ctx.mpf(p.dim) / 2
        alpha, beta, wm = ctx.mpf(p.alpha), ctx.mpf(p.beta), ctx.mpf(w)

        def integrand(t):
            return ctx.besselj(nu, wm * t) * t ** half_n * (1 + t ** alpha) ** (-beta)

        value = ctx.quadosc(integrand, [0, ctx.inf], omega=wm)
        if not ctx.isfinite(value):
            raise ConvergenceError(f"oscillatory quadrature returned {value}")
        return float(value)

    def spectral_density(self, p: KernelParams, omega, q: QuadratureSpec = None) -> SpectralValue:
        """Spectral density by the preferred route: closed form for alpha = 2, contour otherwise.

        At the origin the finite limit is returned when alpha*beta > n.
        """
        w = frequency_norm(p.dim, omega)
        if w == 0:
            return self._origin_value(p)
        if p.alpha == 2.0:
            return self.spectral_closed_alpha2(p, w)
        return self.spectral_contour(p, w, q)

    def high_freq_series(self, p: KernelParams, m: int) -> AsymptoticSeries:
        """High-frequency asymptotic series with m terms.

        For alpha < 2 the terms are algebraic, c_j |w|^{-alpha j - n}; for alpha = 2 the
        expansion of K_{n/2-beta} gives an exponentially damped series.

        Raises:
            PreconditionError: If m is outside [1, MAX_TERMS].
            OverflowError: If a coefficient exceeds double precision.
        """
        if not 1 <= m <= constants["SERIES"]["MAX_TERMS"]:
            raise PreconditionError(f"m must lie in [1, {constants['SERIES']['MAX_TERMS']}], got {m}")
        if p.alpha < 2:
            return self.algebraic_high_freq_series(p, m)
        n, beta = p.dim, p.beta
        nu = n / 2 - beta
        log_prefactor = (
            -((n - 1) / 2 + beta) * math.log(2.0)
            - ((n - 1) / 2) * math.log(math.pi)
            - specfun.log_gamma(beta)
        )
        prefactor = math.exp(log_prefactor)
        leading_exponent = beta - (n + 1) / 2
        terms = [(prefactor, leading_exponent)]
        coefficient = 1.0
        for j in range(1, m):
            coefficient *= (4 * nu * nu - (2 * j - 1) ** 2) / (8 * j)
            if coefficient == 0:
                break
            terms.append((prefactor * coefficient, leading_exponent - j))
        return AsymptoticSeries(regime="HighFreq", terms=terms, exponential_prefactor=True)

    def algebraic_high_freq_series(self, p: KernelParams, m: int) -> AsymptoticSeries:
        """The algebraic high-frequency series evaluated literally for any alpha.

        Terms whose sine factor vanishes are dropped; at alpha = 2 every term vanishes and
        an empty series flagged as degenerate is returned.
        """
        n, alpha, beta = p.dim, p.alpha, p.beta
        log_base = -((n + 2) / 2) * math.log(math.pi) - specfun.log_gamma(beta)
        terms = []
        for j in range(1, m + 1):
            # sindg gives exact zeros at integer multiples of 180 degrees
            sine = special.sindg(90.0 * alpha * j)
            if sine == 0:
                continue
            log_magnitude = (
                log_base
                + alpha * j * math.log(2.0)
                + special.gammaln(beta + j)
                + special.gammaln((alpha * j + n) / 2)
                + special.gammaln((alpha * j + 2) / 2)
                - special.gammaln(j + 1)
                + math.log(abs(sine))
            )
            if log_magnitude > _LOG_MAX:
                raise OverflowError(f"high-frequency coefficient {j} overflows double precision")
            sign = (-1.0) ** (j - 1) * math.copysign(1.0, sine)
            terms.append((sign * math.exp(log_magnitude), -alpha * j - n))
        if not terms:
            return AsymptoticSeries(
                regime="HighFreq",
                degenerate=True,
                note="all algebraic terms vanish at alpha = 2; use the exponential series",
            )
        return AsymptoticSeries(regime="HighFreq", terms=terms)

    def low_freq_leading(self, p: KernelParams, regime: Optional[LowFreqRegime] = None) -> AsymptoticSeries:
        """Leading low-frequency behavior of the spectral density.

        Args:
            p (KernelParams): Kernel parameters.
            regime (str, optional): Force "subcritical" (alpha*beta < n), "critical"
                (alpha*beta = n, logarithmic) or "supercritical" (finite limit). Detected
                from alpha*beta - n when None.

        Returns:
            AsymptoticSeries: A single algebraic term, or a log term plus constant.

        Raises:
            PreconditionError: If a forced algebraic regime contradicts the sign of alpha*beta - n.
        """
        n, alpha, beta = p.dim, p.alpha, p.beta
        detected = low_freq_regime(p)
        regime = regime or detected
        if regime != "critical" and detected != "critical" and regime != detected:
            raise PreconditionError(f"regime {regime} requested but alpha*beta - n puts p in {detected}")
        if regime != "critical" and detected == "critical":
            raise PreconditionError("alpha*beta = n within tolerance; only the critical regime applies")
        product = alpha * beta
        norm = 1.0 / (2.0 ** (n - 1) * math.pi ** (n / 2) * specfun.gamma(n / 2))
        if regime == "subcritical":
            coefficient = specfun.gamma((n - product) / 2) / (
                2.0 ** product * math.pi ** (n / 2) * specfun.gamma(product / 2)
            )
            return AsymptoticSeries(regime="LowFreq", terms=[(coefficient, product - n)])
        if regime == "critical":
            constant = (
                -(beta / n) * (specfun.digamma(beta) + np.euler_gamma)
                + math.log(2.0)
                - np.euler_gamma / 2
                + specfun.digamma(n / 2) / 2
            )
            return AsymptoticSeries(
                regime="LowFreq", terms=[(norm * constant, 0.0)], log_term_coefficient=norm
            )
        limit = (
            norm
            * specfun.gamma(n / alpha)
            * specfun.gamma(beta - n / alpha)
            / (alpha * specfun.gamma(beta))
        )
        return AsymptoticSeries(regime="LowFreq", terms=[(limit, 0.0)])

    def gsgcc_spectrum(self, p: SheetParams, omega, q: QuadratureSpec = None) -> SpectralValue:
        """Spectral density of the sheet as the product of per-axis 1-D densities."""
        try:
            frequency = as_lag(omega, p.dim, "omega")
            value, relative_error = 1.0, 0.0
            for i, w in enumerate(frequency):
                factor = self.spectral_density(p.axis(i), abs(float(w)), q)
                value *= factor.value
                if factor.value:
                    relative_error += factor.est_error / factor.value
            method = "product" if p.dim > 1 else factor.method
            return SpectralValue(value=value, est_error=value * relative_error, method=method, quadrature=factor.quadrature)
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def gsgcc_high_low_freq(
        self, p: SheetParams, regime: Literal["High", "Low"], m: int = 1
    ) -> List[AsymptoticSeries]:
        """Per-axis high- or low-frequency series whose product gives the sheet asymptote."""
        if regime == "High":
            return [self.high_freq_series(p.axis(i), m) for i in range(p.dim)]
        if regime == "Low":
            return [self.low_freq_leading(p.axis(i)) for i in range(p.dim)]
        raise ValueError(f"regime must be High or Low, got {regime}")

    def invert_spectrum(self, p: KernelParams, tau: float, q: QuadratureSpec = None) -> float:
        """Recovers C(tau) = 2 int_0^inf S(w) cos(w tau) dw from the computed density (n = 1).

        The range is split into a head near the origin integrated from the low-frequency
        leading form, a middle range by quadrature over the computed density (logarithmic
        variable below 1, cosine-weighted above), and a tail where the high-frequency
        series truncated at its smallest term is integrated.

        Raises:
            PreconditionError: If n != 1.
        """
        try:
            if p.dim != 1:
                raise PreconditionError("spectral inversion is implemented for n = 1")
            q = self._quadrature(q)
            outer = q.model_copy(
                update={"rel_tol": max(1e-8, 100 * q.rel_tol), "abs_tol": max(1e-12, 100 * q.abs_tol)}
            )
            tau = abs(float(tau))
            head_frequency = constants["QUADRATURE"]["INVERSION_HEAD_FREQUENCY"]
            tail_frequency = constants["QUADRATURE"]["INVERSION_TAIL_FREQUENCY"]

            def density(w):
                return self.spectral_density(p, w, q).value

            low = self.low_freq_leading(p)
            coefficient, exponent = low.terms[0]
            if low.log_term_coefficient:
                head = low.log_term_coefficient * head_frequency * (math.log(1.0 / head_frequency) + 1.0)
                head += coefficient * head_frequency
            else:
                head = coefficient * head_frequency ** (exponent + 1) / (exponent + 1)

            lower, lower_error = _quad(
                lambda s: density(math.exp(s)) * math.cos(math.exp(s) * tau) * math.exp(s),
                math.log(head_frequency),
                0.0,
                outer,
            )
            if tau > 0:
                middle, middle_error = _quad(density, 1.0, tail_frequency, outer, weight="cos", wvar=tau)
            else:
                middle, middle_error = _quad(density, 1.0, tail_frequency, outer)

            if p.alpha == 2.0:
                tail_function = density
            else:
                series = self.high_freq_series(p, constants["SERIES"]["MAX_TERMS"])
                kept = series.terms[: least_term_count(series, tail_frequency)]

                def tail_function(w):
                    return math.fsum(c * w ** e for c, e in kept)

            if tau > 0:
                tail, tail_error = _quad(
                    tail_function, tail_frequency, np.inf, outer, outer.abs_tol, weight="cos", wvar=tau
                )
            elif p.alpha == 2.0:
                tail, tail_error = _quad(tail_function, tail_frequency, np.inf, outer)
            else:
                tail = math.fsum(-c * tail_frequency ** (e + 1) / (e + 1) for c, e in kept)
                tail_error = 0.0
            value = 2.0 * (head + lower + middle + tail)
            logger.debug(
                f"Inversion at tau={tau}: head {head:.3e}, tail {tail:.3e}, "
                f"error {2 * (lower_error + middle_error + tail_error):.3e}."
            )
            return value
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def divergence_verdict(self, p: KernelParams, q: QuadratureSpec = None) -> GrowthCheck:
        """Numerical check of whether the spectral density diverges at the origin.

        The density is sampled on decades approaching zero. Near the origin the decade
        increments decay like 10^(-m k) with m = alpha*beta - n, so the density is judged
        divergent when the extrapolated exponent is within the exponent resolution of zero
        or below it. Increments lost in quadrature noise count as convergence.
        """
        frequencies = constants["REGIMES"]["DIVERGENCE_FREQUENCIES"]
        evaluations = [self.spectral_density(p, w, q) for w in frequencies]
        values = [e.value for e in evaluations]
        increments = []
        for previous, current in zip(evaluations[:-1], evaluations[1:]):
            increment = current.value - previous.value
            noise = (
                10.0 * (previous.est_error + current.est_error)
                + 1e-13 * max(abs(previous.value), abs(current.value))
            )
            increments.append(increment if increment > noise else 0.0)
        last_ratio = increments[-1] / increments[-2] if increments[-2] != 0 else math.inf
        exponent = decay_exponent(increments, p.alpha)
        diverges = bool(exponent <= constants["REGIMES"]["EXPONENT_RESOLUTION"])
        logger.debug(f"Spectral divergence check for {p}: increments {increments}, exponent {exponent}.")
        return GrowthCheck(
            diverges=diverges, points=frequencies, values=values, last_ratio=last_ratio, exponent=exponent
        )
