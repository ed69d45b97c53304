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
"""Random Field Utils Cauchy fields main client
   2024 Google
"""
from .version import __version__

# Standard library imports
import logging
import pkgutil

# Third-party imports
import toml

# Local imports
from . import kernels
from .client_options import ClientOptions
from .spectral_operations import SpectralOperations
from .simulation_operations import SimulationOperations
from .analysis_operations import AnalysisOperations
from .lamperti_operations import LampertiOperations, remainder_exponent

# Load constants
constants = toml.loads(pkgutil.get_data(__name__, "constants.toml").decode())
# Logger
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(constants["LOGGING"]["FIELDS_LOGGER"])


class Client:
    """Represents the main Cauchy fields client."""

    def __init__(self, client_options: ClientOptions = None):
        if client_options:
            self._client_options = client_options
        else:
            self._client_options = ClientOptions()

        # Initialize operation classes
        self._spectral_ops = SpectralOperations(self)
        self._simulation_ops = SimulationOperations(self)
        self._analysis_ops = AnalysisOperations(self)
        self._lamperti_ops = LampertiOperations(self)

    # Covariances
    def gfgcc_cov(self, p, tau):
        return kernels.gfgcc_cov(p, tau)

    def gsgcc_cov(self, p, tau):
        return kernels.gsgcc_cov(p, tau)

    def powered_exp_cov(self, p, tau):
        return kernels.powered_exp_cov(p, tau)

    # Delegate all operations to appropriate operation classes
    def spectral_density(self, p, omega, q=None):
        return self._spectral_ops.spectral_density(p, omega, q)

    def spectral_closed_alpha2(self, p, omega):
        return self._spectral_ops.spectral_closed_alpha2(p, omega)

    def spectral_contour(self, p, omega, q=None):
        return self._spectral_ops.spectral_contour(p, omega, q)

    def spectral_hankel(self, p, omega, q=None):
        return self._spectral_ops.spectral_hankel(p, omega, q)

    def high_freq_series(self, p, m):
        return self._spectral_ops.high_freq_series(p, m)

    def algebraic_high_freq_series(self, p, m):
        return self._spectral_ops.algebraic_high_freq_series(p, m)

    def low_freq_leading(self, p, regime=None):
        return self._spectral_ops.low_freq_leading(p, regime)

    def gsgcc_spectrum(self, p, omega, q=None):
        return self._spectral_ops.gsgcc_spectrum(p, omega, q)

    def gsgcc_high_low_freq(self, p, regime, m=1):
        return self._spectral_ops.gsgcc_high_low_freq(p, regime, m)

    def invert_spectrum(self, p, tau, q=None):
        return self._spectral_ops.invert_spectrum(p, tau, q)

    def divergence_verdict(self, p, q=None):
        return self._spectral_ops.divergence_verdict(p, q)

    def embedding_diagnostics(self, p, g):
        return self._simulation_ops.embedding_diagnostics(p, g)

    def simulate_gfgcc(self, p, g):
        return self._simulation_ops.simulate_gfgcc(p, g)

    def simulate_gfgcc_pair(self, p, g):
        return self._simulation_ops.simulate_gfgcc_pair(p, g)

    def simulate_gsgcc(self, p, g):
        return self._simulation_ops.simulate_gsgcc(p, g)

    def simulate_gsgcc_pair(self, p, g):
        return self._simulation_ops.simulate_gsgcc_pair(p, g)

    def simulate_batch(self, p, g, count):
        return self._simulation_ops.simulate_batch(p, g, count)

    def write_field(self, field, path):
        return self._simulation_ops.write_field(field, path)

    def read_field(self, path):
        return self._simulation_ops.read_field(path)

    def field_to_frame(self, field):
        return self._simulation_ops.field_to_frame(field)

    def classify_dependence(self, p):
        return self._analysis_ops.classify_dependence(p)

    def lrd_integral_witness(self, p, R):
        return self._analysis_ops.lrd_integral_witness(p, R)

    def integral_growth_verdict(self, p):
        return self._analysis_ops.integral_growth_verdict(p)

    def predict_dimension(self, p):
        return self._analysis_ops.predict_dimension(p)

    def dimension_label(self, p):
        return self._analysis_ops.dimension_label(p)

    def exact_variogram(self, p, lags):
        return self._analysis_ops.exact_variogram(p, lags)

    def fit_variogram(self, lags, values, dim):
        return self._analysis_ops.fit_variogram(lags, values, dim)

    def estimate_variogram(self, f, max_lag=None):
        return self._analysis_ops.estimate_variogram(f, max_lag)

    def estimate_variogram_ensemble(self, fields, max_lag=None):
        return self._analysis_ops.estimate_variogram_ensemble(fields, max_lag)

    def tangent_cov_gfgcc(self, p, u, v):
        return self._analysis_ops.tangent_cov_gfgcc(p, u, v)

    def tangent_cov_gsgcc(self, p, u, v):
        return self._analysis_ops.tangent_cov_gsgcc(p, u, v)

    def total_increment_var(self, p, t, tau):
        return self._analysis_ops.total_increment_var(p, t, tau)

    def total_increment_limit_cov(self, p, u, v):
        return self._analysis_ops.total_increment_limit_cov(p, u, v)

    def variance_bound_ratios(self, p, lags):
        return self._analysis_ops.variance_bound_ratios(p, lags)

    def lss_ratio(self, p, tau):
        return self._analysis_ops.lss_ratio(p, tau)

    def lamperti_cov(self, L, t, s):
        return self._lamperti_ops.covariance(L, t, s)

    def yss_cov(self, L, t, s):
        return self._lamperti_ops.yss_cov(L, t, s)

    def yss_sheet_cov(self, L, t, s):
        return self._lamperti_ops.yss_sheet_cov(L, t, s)

    def ymss_cov(self, L, t, s):
        return self._lamperti_ops.ymss_cov(L, t, s)

    def ymss_sheet_cov(self, L, t, s):
        return self._lamperti_ops.ymss_sheet_cov(L, t, s)

    def lamperti_correlation(self, L, t, tau):
        return self._lamperti_ops.lamperti_correlation(L, t, tau)

    def lamperti_lrd_witness(self, L, t, V):
        return self._lamperti_ops.lamperti_lrd_witness(L, t, V)

    def lamperti_growth_verdict(self, L, t):
        return self._lamperti_ops.lamperti_growth_verdict(L, t)

    def increment_var_expansion(self, L, t, tau):
        return self._lamperti_ops.increment_var_expansion(L, t, tau)

    def total_increment_var_mss_sheet(self, L, t, tau):
        return self._lamperti_ops.total_increment_var_mss_sheet(L, t, tau)

    def lamperti_tangent_cov(self, L, t, u, v):
        return self._lamperti_ops.lamperti_tangent_cov(L, t, u, v)

    def tangent_ratio(self, L, t, u, v, eps):
        return self._lamperti_ops.tangent_ratio(L, t, u, v, eps)

    def remainder_exponent(self, L):
        return remainder_exponent(L)

    def transform_field(self, field, L, origin=0.0):
        return self._lamperti_ops.transform_field(field, L, origin)

    def inverse_first(self, field, H, origin=0.0):
        return self._lamperti_ops.inverse_first(field, H, origin)

    def inverse_second(self, field, H, origin=0.0):
        return self._lamperti_ops.inverse_second(field, H, origin)

    def levy_inverse_cov(self, H, t, tau):
        return self._lamperti_ops.levy_inverse_cov(H, t, tau)
