#!/usr/bin/env python
# -*- coding: utf-8 -*-
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
"""Random Field Utils Cauchy fields covariance kernel test suite
"""

# Standard imports
import math

# Third-party imports
import numpy as np
import pytest
from pydantic import ValidationError

# Package to test
from randomfieldutils.cauchy import DimensionMismatch, DomainError, KernelParams, SheetParams
from randomfieldutils.cauchy import kernels


class TestKernelParams:
    def test_alpha_range_is_enforced(self):
        with pytest.raises(ValidationError, match=r"alpha must lie in \(0, 2\]"):
            KernelParams(alpha=2.5, beta=1.0)
        with pytest.raises(ValidationError):
            KernelParams(alpha=0.0, beta=1.0)

    def test_beta_and_dim_ranges(self):
        with pytest.raises(ValidationError, match="beta must be > 0"):
            KernelParams(alpha=1.0, beta=0.0)
        with pytest.raises(ValidationError):
            KernelParams(alpha=1.0, beta=1.0, dim=0)

    def test_sheet_lengths_and_min_alpha(self):
        p = SheetParams(alphas=(0.5, 1.5, 0.5), betas=(1.0, 2.0, 3.0))
        assert p.dim == 3
        assert p.min_alpha == 0.5
        assert p.min_alpha_multiplicity == 2
        assert p.axis(1) == KernelParams(alpha=1.5, beta=2.0)
        with pytest.raises(ValidationError):
            SheetParams(alphas=(1.0, 1.0), betas=(1.0,))

    def test_params_are_frozen(self):
        p = KernelParams(alpha=1.0, beta=1.0)
        with pytest.raises(ValidationError):
            p.alpha = 2.0


class TestKernels:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self, seed):
        self._rng = np.random.default_rng(seed)
        yield

    def test_gfgcc_cov_values(self):
        assert kernels.gfgcc_cov(KernelParams(alpha=2, beta=1, dim=2), [0.6, 0.8]) == pytest.approx(0.5, rel=1e-15)
        assert kernels.gfgcc_cov(KernelParams(alpha=0.3, beta=7, dim=3), [0, 0, 0]) == 1.0
        assert kernels.gfgcc_cov(KernelParams(alpha=1, beta=2), 3.0) == pytest.approx(0.0625, rel=1e-15)

    def test_gfgcc_cov_decreasing_and_bounded(self):
        p = KernelParams(alpha=1.3, beta=0.4)
        values = [kernels.gfgcc_cov(p, r) for r in np.geomspace(1e-6, 1e6, 200)]
        assert all(0 < v < 1 for v in values)
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_gfgcc_cov_large_lag_decay(self):
        p = KernelParams(alpha=1.0, beta=2.0)
        assert kernels.gfgcc_cov(p, 1e8) * 1e8 ** 2.0 == pytest.approx(1.0, rel=1e-6)

    def test_gfgcc_cov_extreme_lag_does_not_overflow(self):
        p = KernelParams(alpha=2.0, beta=1.0, dim=2)
        assert kernels.gfgcc_cov(p, [1e200, 1e200]) == 0.0
        assert kernels.lag_norm(p, [3e200, 4e200]) == pytest.approx(5e200, rel=1e-15)

    def test_gfgcc_cov_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            kernels.gfgcc_cov(KernelParams(alpha=1, beta=1, dim=2), [1.0, 2.0, 3.0])

    def test_gsgcc_cov_values(self):
        assert kernels.gsgcc_cov(SheetParams(alphas=(2, 2), betas=(1, 1)), [1, 1]) == pytest.approx(0.25, rel=1e-15)
        assert kernels.gsgcc_cov(SheetParams(alphas=(0.4, 1.1), betas=(3, 2)), [0, 0]) == 1.0
        assert kernels.gsgcc_cov(SheetParams(alphas=(1, 2), betas=(2, 1)), [3, 1]) == pytest.approx(0.03125, rel=1e-15)

    def test_gsgcc_cov_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            kernels.gsgcc_cov(SheetParams(alphas=(1, 1), betas=(1, 1)), [1.0])

    def test_gsgcc_matches_gfgcc_in_one_dimension(self):
        for alpha, beta, r in zip(
            self._rng.uniform(0.1, 2.0, 50), self._rng.uniform(0.1, 5.0, 50), self._rng.uniform(-10, 10, 50)
        ):
            sheet = SheetParams(alphas=(alpha,), betas=(beta,))
            assert kernels.gsgcc_cov(sheet, [r]) == kernels.gfgcc_cov(KernelParams(alpha=alpha, beta=beta), r)

    def test_powered_exp_cov_values(self):
        assert kernels.powered_exp_cov(KernelParams(alpha=1.5, beta=2), 0.0) == 1.0
        assert kernels.powered_exp_cov(KernelParams(alpha=2, beta=1), 1.0) == pytest.approx(math.exp(-1), rel=1e-15)
        assert kernels.powered_exp_cov(KernelParams(alpha=1, beta=0.5), 2.0) == pytest.approx(math.exp(-1), rel=1e-15)

    def test_levy_fbf_cov(self):
        assert kernels.levy_fbf_cov(0.3, [0.6, 0.8], [0.6, 0.8]) == pytest.approx(1.0, rel=1e-15)
        assert kernels.levy_fbf_cov(0.7, [1.0, 2.0], [0.0, 0.0]) == 0.0
        assert kernels.levy_fbf_cov(0.5, 1.0, 2.0) == pytest.approx(1.0, rel=1e-15)
        u, v = self._rng.normal(size=3), self._rng.normal(size=3)
        assert kernels.levy_fbf_cov(0.4, u, v) == pytest.approx(kernels.levy_fbf_cov(0.4, v, u), rel=1e-15)

    def test_levy_fbf_cov_errors(self):
        with pytest.raises(DimensionMismatch):
            kernels.levy_fbf_cov(0.5, [1.0, 2.0], [1.0])
        with pytest.raises(DomainError):
            kernels.levy_fbf_cov(1.5, 1.0, 1.0)

    def test_fbs_cov(self):
        assert kernels.fbs_cov([0.3, 0.8], [1.0, -1.0], [1.0, -1.0]) == pytest.approx(1.0, rel=1e-15)
        assert kernels.fbs_cov([0.3, 0.8], [1.0, 2.0], [1.0, 0.0]) == 0.0
        assert kernels.fbs_cov([0.5, 0.5], [1.0, 1.0], [2.0, 3.0]) == pytest.approx(1.0, rel=1e-15)
        with pytest.raises(DimensionMismatch):
            kernels.fbs_cov([0.5, 0.5], [1.0], [1.0, 2.0])

    def test_local_expansion_error(self):
        p = KernelParams(alpha=1.0, beta=1.0)
        assert kernels.local_expansion_error(p, 0.0) == 0.0
        value = kernels.local_expansion_error(p, 0.01)
        assert 0.5e-4 < value < 2e-4
        with pytest.raises(DomainError):
            kernels.local_expansion_error(p, 1.0)

    def test_local_expansion_remainder_order(self):
        p = KernelParams(alpha=0.8, beta=1.7)
        bound = p.beta * (p.beta + 1) / 2
        for r in (1e-1, 1e-2, 1e-3, 1e-4):
            ratio = kernels.local_expansion_error(p, r) / r ** (2 * p.alpha)
            assert 0 < ratio < 2 * bound

    def test_gram_matrix_positive_definite(self):
        for _ in range(50):
            dim = int(self._rng.integers(1, 4))
            size = int(self._rng.integers(2, 33))
            p = KernelParams(alpha=self._rng.uniform(0.05, 2.0), beta=self._rng.uniform(0.05, 5.0), dim=dim)
            points = self._rng.uniform(-5.0, 5.0, size=(size, dim))
            assert np.linalg.eigvalsh(kernels.gram_matrix(p, points)).min() >= -1e-10

    def test_complete_monotonicity(self):
        r = 0.1 + 0.1 * np.arange(60)
        for alpha in (0.3, 0.7, 1.0):
            values = kernels.cauchy_correlation(r, alpha, 1.5)
            for k in range(1, 5):
                assert np.all((-1) ** k * np.diff(values, n=k) >= 0)

    def test_complements_match_direct_differences(self):
        p = SheetParams(alphas=(0.6, 1.4), betas=(2.0, 0.5))
        lag = np.array([0.7, -1.3])
        assert kernels.sheet_complement(p, lag) == pytest.approx(1 - kernels.gsgcc_cov(p, lag), rel=1e-13)
        assert kernels.cauchy_complement(1e-12, 1.0, 2.0) == pytest.approx(2e-12, rel=1e-9)

    def test_increment_covariances(self):
        p = KernelParams(alpha=1.2, beta=0.9, dim=2)
        u = np.array([0.3, 0.1])
        assert kernels.increment_cov(p, 0.5, u, u) == pytest.approx(2 * (1 - kernels.gfgcc_cov(p, 0.5 * u)), rel=1e-13)
        sheet = SheetParams(alphas=(0.6, 1.4), betas=(2.0, 0.5))
        assert kernels.sheet_increment_cov(sheet, 0.5, u, u) == pytest.approx(
            kernels.gsgcc_increment_variance(sheet, 0.5 * u, [0.0, 0.0]), rel=1e-13
        )
        assert kernels.total_increment_cov(sheet, 0.5, u, [0.0, 1.0]) == 0.0
