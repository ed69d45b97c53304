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
"""Random Field Utils Cauchy fields Lamperti transformation test suite
"""

# Standard imports
import math

# Third-party imports
import numpy as np
import pytest

# Package to test
from randomfieldutils.cauchy import (
    Client,
    DomainError,
    FieldGrid,
    GridSpec,
    KernelParams,
    LampertiParams,
    PreconditionError,
    SheetParams,
)


def _first(H, alpha, beta, dim=1):
    return LampertiParams(mode="FirstSS", H=H, base=KernelParams(alpha=alpha, beta=beta, dim=dim))


def _second(H, alpha, beta, dim=1):
    return LampertiParams(mode="SecondMSS", H=H, base=KernelParams(alpha=alpha, beta=beta, dim=dim))


def _slope(lags, values):
    return np.polyfit(np.log(lags), np.log(values), 1)[0]


class TestLampertiCovariance:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self, seed):
        self._client = Client()
        self._rng = np.random.default_rng(seed)
        yield

    def test_covariance_values(self):
        assert self._client.yss_cov(_first(0.5, 2, 1), [1.0], [math.e]) == pytest.approx(math.sqrt(math.e) / 2, rel=1e-14)
        sheet = LampertiParams(mode="FirstSS", H=1.0, base=SheetParams(alphas=(1, 1), betas=(1, 1)))
        assert self._client.yss_sheet_cov(sheet, [1.0, 1.0], [math.e, math.e]) == pytest.approx(math.e / 2, rel=1e-14)
        assert self._client.yss_cov(_first(0.8, 1, 1), [1.0], [1.0]) == pytest.approx(1.0, rel=1e-15)
        assert self._client.ymss_cov(_second((0.3, 0.9), 1, 2, dim=2), [1.0, 1.0], [1.0, 1.0]) == pytest.approx(1.0)

    def test_diagonal_is_weight_squared(self):
        t = [0.5, 3.0]
        assert self._client.yss_cov(_first(0.7, 1.2, 0.8, dim=2), t, t) == pytest.approx(math.hypot(*t) ** 1.4, rel=1e-14)
        L = LampertiParams(mode="SecondMSS", H=(0.4, 1.1), base=SheetParams(alphas=(0.5, 1.5), betas=(1, 2)))
        assert self._client.ymss_sheet_cov(L, t, t) == pytest.approx(0.5 ** 0.8 * 3.0 ** 2.2, rel=1e-14)

    def test_self_similarity(self):
        for L in (_first(0.7, 1.3, 0.6, dim=2), LampertiParams(mode="FirstSS", H=1.4, base=SheetParams(alphas=(0.5, 2), betas=(1, 3)))):
            for _ in range(20):
                t, s = self._rng.uniform(0.1, 5.0, size=(2, 2))
                c = self._rng.choice([0.5, 2.0, 10.0])
                assert self._client.lamperti_cov(L, c * t, c * s) == pytest.approx(
                    c ** (2 * L.H) * self._client.lamperti_cov(L, t, s), rel=1e-12
                )

    def test_multi_self_similarity(self):
        for L in (
            _second((0.3, 1.2), 1.3, 0.6, dim=2),
            LampertiParams(mode="SecondMSS", H=(0.5, 0.8), base=SheetParams(alphas=(0.5, 2), betas=(1, 3))),
        ):
            for _ in range(20):
                t, s = self._rng.uniform(0.1, 5.0, size=(2, 2))
                c = self._rng.uniform(0.2, 8.0, size=2)
                scale = float(np.prod(c ** (2 * np.asarray(L.H))))
                assert self._client.lamperti_cov(L, c * t, c * s) == pytest.approx(
                    scale * self._client.lamperti_cov(L, t, s), rel=1e-12
                )

    def test_transforms_coincide_on_the_line(self):
        for t, s in [(0.3, 2.0), (1.0, 1.0), (4.0, 0.7)]:
            first = self._client.yss_cov(_first(0.6, 1.5, 0.5), [t], [s])
            assert self._client.ymss_cov(_second(0.6, 1.5, 0.5), [t], [s]) == pytest.approx(first, rel=1e-14)

    def test_mss_sheet_is_separable(self):
        L = LampertiParams(mode="SecondMSS", H=(0.4, 1.1), base=SheetParams(alphas=(0.5, 1.5), betas=(1, 2)))
        t, s = [0.5, 3.0], [2.0, 1.5]
        factors = [
            self._client.ymss_sheet_cov(
                LampertiParams(mode="SecondMSS", H=(h,), base=SheetParams(alphas=(a,), betas=(b,))), [ti], [si]
            )
            for h, a, b, ti, si in zip((0.4, 1.1), (0.5, 1.5), (1, 2), t, s)
        ]
        assert self._client.ymss_sheet_cov(L, t, s) == pytest.approx(factors[0] * factors[1], rel=1e-14)

    def test_mode_and_domain_errors(self):
        with pytest.raises(PreconditionError):
            self._client.yss_cov(_second(0.5, 1, 1), [1.0], [2.0])
        with pytest.raises(PreconditionError):
            self._client.yss_sheet_cov(_first(0.5, 1, 1), [1.0], [2.0])
        with pytest.raises(DomainError):
            self._client.yss_cov(_first(0.5, 1, 1), [0.0], [2.0])
        with pytest.raises(DomainError):
            self._client.ymss_cov(_second(0.5, 1, 1, dim=2), [1.0, -1.0], [2.0, 1.0])

    def test_params_validation(self):
        assert _second(0.5, 1, 1, dim=2).H == (0.5, 0.5)
        with pytest.raises(ValueError):
            _first((0.5, 0.5), 1, 1, dim=2)
        with pytest.raises(ValueError):
            _second((0.5, 0.5, 0.5), 1, 1, dim=2)
        with pytest.raises(ValueError):
            _first(0.0, 1, 1)


class TestLampertiCorrelation:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self):
        self._client = Client()
        yield

    def test_correlation_values(self):
        assert self._client.lamperti_correlation(_first(0.5, 2, 1), [1.0], [math.e - 1]) == pytest.approx(0.5, rel=1e-14)
        assert self._client.lamperti_correlation(_first(0.5, 1, 1), [2.0], [0.0]) == 1.0
        assert self._client.lamperti_correlation(_first(0.5, 1, 1), [2.0], [1e-12]) == pytest.approx(1.0, abs=1e-11)

    def test_correlation_free_of_hurst_exponent(self):
        t, tau = [0.7, 2.0], [0.4, 1.5]
        values = {self._client.lamperti_correlation(_first(h, 1.2, 0.8, dim=2), t, tau) for h in (0.3, 1.0, 2.7)}
        values |= {self._client.lamperti_correlation(_second(h, 1.2, 0.8, dim=2), t, tau) for h in (0.3, 1.0, 2.7)}
        assert len(values) == 1

    def test_correlation_matches_covariance(self):
        L = _first(0.9, 1.5, 0.5, dim=2)
        t, tau = np.array([0.7, 2.0]), np.array([0.4, 1.5])
        covariance = self._client.lamperti_cov(L, t + tau, t)
        normalized = covariance / math.sqrt(self._client.lamperti_cov(L, t + tau, t + tau) * self._client.lamperti_cov(L, t, t))
        assert self._client.lamperti_correlation(L, t, tau) == pytest.approx(normalized, rel=1e-13)

    def test_correlation_needs_nonnegative_lag(self):
        with pytest.raises(DomainError):
            self._client.lamperti_correlation(_first(0.5, 1, 1), [1.0], [-0.5])


class TestLampertiDependence:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self):
        self._client = Client()
        yield

    def test_witness_grows_fast(self):
        L = _first(0.5, 2, 1)
        assert self._client.lamperti_lrd_witness(L, [1.0], 10.0) / self._client.lamperti_lrd_witness(L, [1.0], 5.0) > 10
        assert self._client.lamperti_lrd_witness(L, [1.0], 0.0) == 0.0
        values = [self._client.lamperti_lrd_witness(L, [1.0], V) for V in (0.5, 1, 2, 4, 8)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_witness_scales_with_point(self):
        L = _first(0.5, 1.5, 2)
        assert self._client.lamperti_lrd_witness(L, [3.0], 2.0) == pytest.approx(
            3.0 * self._client.lamperti_lrd_witness(L, [1.0], 2.0), rel=1e-12
        )
        with pytest.raises(DomainError):
            self._client.lamperti_lrd_witness(L, [1.0], -1.0)

    def test_sheet_witness_factorizes(self):
        sheet = LampertiParams(mode="SecondMSS", H=(0.5, 0.5), base=SheetParams(alphas=(1, 2), betas=(1, 1)))
        product = self._client.lamperti_lrd_witness(_first(0.5, 1, 1), [1.0], 3.0) * self._client.lamperti_lrd_witness(
            _first(0.5, 2, 1), [1.0], 3.0
        )
        assert self._client.lamperti_lrd_witness(sheet, [1.0, 1.0], 3.0) == pytest.approx(product, rel=1e-8)

    def test_plane_witness_increases(self):
        L = _first(0.5, 1, 1, dim=2)
        small = self._client.lamperti_lrd_witness(L, [1.0, 1.0], 1.0)
        large = self._client.lamperti_lrd_witness(L, [1.0, 1.0], 2.0)
        assert 0 < small < large

    @pytest.mark.parametrize("alpha, beta", [(0.5, 0.5), (1, 1), (2, 1), (2, 3), (1.5, 4)])
    def test_dependence_is_long_for_every_base(self, alpha, beta):
        check = self._client.lamperti_growth_verdict(_first(0.5, alpha, beta), [1.0])
        assert check.diverges
        assert all(b > a for a, b in zip(check.values, check.values[1:]))


class TestLampertiIncrements:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self):
        self._client = Client()
        yield

    def test_expansion_ratio_near_one(self):
        for L, t in [
            (_first(0.9, 1, 1), [1.0]),
            (_first(0.3, 1.5, 0.5, dim=2), [1.0, 1.0]),
            (_second((0.6, 1.2), 0.8, 2, dim=2), [1.0, 1.0]),
            (LampertiParams(mode="FirstSS", H=0.5, base=SheetParams(alphas=(1, 1), betas=(1, 2))), [1.0, 1.0]),
        ]:
            exact, leading = self._client.increment_var_expansion(L, t, [1e-4] * L.dim)
            assert 0.99 <= exact / leading <= 1.01

    def test_leading_term_free_of_point_when_stationary(self):
        L = _first(0.5, 1, 2)
        leading = [self._client.increment_var_expansion(L, [t], [1e-3])[1] for t in (0.5, 1.0, 7.0)]
        assert leading == pytest.approx([2 * 2 * 1e-3] * 3, rel=1e-12)

    def test_leading_term_depends_on_point_in_the_plane(self):
        for H in (0.5, 1.0):
            L = _first(H, 1, 1, dim=2)
            first = self._client.increment_var_expansion(L, [1.0, 2.0], [1e-3, 1e-3])[1]
            second = self._client.increment_var_expansion(L, [2.0, 3.0], [1e-3, 1e-3])[1]
            assert abs(first / second - 1) > 1e-3

    def test_small_lag_exponent_is_alpha(self):
        lags = np.array([1e-4, 1e-5, 1e-6])
        L = _first(0.9, 1, 1)
        exact = [self._client.increment_var_expansion(L, [1.5], [x])[0] for x in lags]
        assert _slope(lags, exact) == pytest.approx(1.0, abs=0.01)
        sheet = LampertiParams(mode="SecondMSS", H=(0.9, 0.9), base=SheetParams(alphas=(1, 1.5), betas=(1, 1)))
        exact = [self._client.increment_var_expansion(sheet, [1.0, 2.0], [x, x])[0] for x in lags]
        assert _slope(lags, exact) == pytest.approx(1.0, abs=0.02)

    def test_total_increment_leading_term(self):
        L = LampertiParams(mode="SecondMSS", H=(0.5, 0.75), base=SheetParams(alphas=(1, 1.5), betas=(1, 1)))
        h = 1e-3
        for t in ([1.0, 1.0], [3.0, 5.0]):
            leading = self._client.total_increment_var_mss_sheet(L, t, [h, h])[1]
            assert leading == pytest.approx(4 * h ** 2.5, rel=1e-12)
        assert self._client.total_increment_var_mss_sheet(L, [1.0, 2.0], [0.0, h])[0] == 0.0

    def test_total_increment_ratio_tends_to_one(self):
        L = LampertiParams(mode="SecondMSS", H=(0.5, 0.75), base=SheetParams(alphas=(1, 1.5), betas=(1, 1)))
        gaps = []
        for h in (1e-3, 1e-4, 1e-5):
            exact, leading = self._client.total_increment_var_mss_sheet(L, [2.0, 3.0], [h, h])
            gaps.append(abs(exact / leading - 1))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-2

    def test_total_increment_needs_mss_sheet(self):
        with pytest.raises(PreconditionError):
            self._client.total_increment_var_mss_sheet(_second((0.5, 0.5), 1, 1, dim=2), [1.0, 1.0], [1e-3, 1e-3])

    def test_remainder_exponent(self):
        sheet = LampertiParams(mode="SecondMSS", H=(0.5, 0.5), base=SheetParams(alphas=(0.5, 1.5), betas=(1, 1)))
        assert self._client.remainder_exponent(sheet) == 0.5
        assert self._client.remainder_exponent(_first(0.5, 2, 1)) == 0.0


class TestLampertiTangent:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self):
        self._client = Client()
        yield

    def test_unit_point_reduces_to_base_tangent(self):
        L = _first(0.7, 1.5, 2)
        for u, v in [(1.0, 0.3), (0.5, 2.0)]:
            assert self._client.lamperti_tangent_cov(L, [1.0], [u], [v]) == pytest.approx(
                self._client.tangent_cov_gfgcc(L.base, [u], [v]), rel=1e-15
            )
        assert self._client.lamperti_tangent_cov(L, [2.0], [0.0], [0.5]) == 0.0

    def test_tangent_scales_with_point(self):
        L = _second((0.4, 0.9), 1, 1, dim=2)
        t, u, v = [2.0, 0.5], [1.0, 0.5], [0.5, 1.0]
        expected = 2.0 ** 0.8 * 0.5 ** 1.8 * self._client.tangent_cov_gfgcc(L.base, [0.5, 1.0], [0.25, 2.0])
        assert self._client.lamperti_tangent_cov(L, t, u, v) == pytest.approx(expected, rel=1e-14)

    def test_tangent_is_small_scale_limit(self):
        cases = [
            (_first(0.5, 1, 1), [1.0], [1.0], [0.5], 1e-3),
            (_first(0.7, 1, 1, dim=2), [1.0, 2.0], [1.0, 0.5], [0.5, 1.0], 1e-3),
            (_second((0.3, 0.8), 1.5, 2, dim=2), [1.5, 0.5], [1.0, 0.5], [0.5, 1.0], 1e-6),
            (_first(1.2, 0.5, 1), [2.0], [1.0], [0.25], 1e-6),
            (
                LampertiParams(mode="SecondMSS", H=(0.5, 0.5), base=SheetParams(alphas=(1, 1.5), betas=(2, 1))),
                [1.0, 2.0], [1.0, 0.5], [0.5, 1.0], 1e-6,
            ),
        ]
        for L, t, u, v, eps in cases:
            assert self._client.tangent_ratio(L, t, u, v, eps) == pytest.approx(
                self._client.lamperti_tangent_cov(L, t, u, v), rel=1e-2
            )


class TestLampertiFields:
    @pytest.fixture(autouse=True)
    def setup_and_teardown(self, seed):
        self._client = Client()
        self._rng = np.random.default_rng(seed)
        self._seed = seed
        yield

    def test_second_transform_round_trip(self):
        g = GridSpec(dim=2, points_per_axis=16, spacing=0.1, seed=self._seed)
        field = FieldGrid(grid=g, values=self._rng.standard_normal((16, 16)), kernel_tag="noise")
        L = LampertiParams(mode="SecondMSS", H=(0.6, 1.3), base=SheetParams(alphas=(1, 1), betas=(1, 1)))
        forward = self._client.transform_field(field, L, origin=-0.8)
        back = self._client.inverse_second(forward, L.H, origin=-0.8)
        assert np.max(np.abs(back.values - field.values)) <= 1e-12

    def test_first_transform_round_trip(self):
        g = GridSpec(dim=1, points_per_axis=32, spacing=0.05, seed=self._seed)
        field = FieldGrid(grid=g, values=self._rng.standard_normal(32), kernel_tag="noise")
        forward = self._client.transform_field(field, _first(0.8, 1, 1), origin=-0.5)
        back = self._client.inverse_first(forward, 0.8, origin=-0.5)
        np.testing.assert_allclose(back.values, field.values, rtol=1e-14, atol=0)

    def test_first_transform_weights(self):
        g = GridSpec(dim=2, points_per_axis=8, spacing=0.25, seed=self._seed)
        field = FieldGrid(grid=g, values=np.ones((8, 8)), kernel_tag="ones")
        forward = self._client.transform_field(field, _first(0.5, 1, 1, dim=2))
        x, y = 3 * 0.25, 5 * 0.25
        assert forward.values[3, 5] == pytest.approx(math.hypot(math.exp(x), math.exp(y)) ** 0.5, rel=1e-14)
        with pytest.raises(PreconditionError):
            self._client.transform_field(field, _first(0.5, 1, 1))

    def test_transformed_sample_is_self_similar(self):
        # the stationary field sampled at x and x + ln c yields Y at t and c t
        g = GridSpec(dim=1, points_per_axis=64, spacing=0.125, seed=self._seed)
        L = _first(0.8, 1, 1)
        fields = self._client.simulate_batch(L.base, g, 2000)
        values = np.stack([self._client.transform_field(f, L).values for f in fields])
        shift = 8  # ln c = 1
        ratio = np.mean(values[:, 40] ** 2) / np.mean(values[:, 40 - shift] ** 2)
        assert ratio == pytest.approx(math.e ** 1.6, rel=0.15)

    def test_inverse_of_levy_field_is_stationary_only_on_the_line(self):
        line = [self._client.levy_inverse_cov(0.5, [t], [0.4]) for t in (0.0, 1.3, -2.0)]
        assert line == pytest.approx([line[0]] * 3, rel=1e-12)
        plane_origin = self._client.levy_inverse_cov(0.5, [0.0, 0.0], [0.3, 0.2])
        plane_shifted = self._client.levy_inverse_cov(0.5, [1.0, -0.5], [0.3, 0.2])
        assert abs(plane_origin - plane_shifted) > 1e-3
