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
"""Random Field Utils Cauchy fields test suite configuration
   2024 Google
"""
import pytest


def pytest_addoption(parser):
    parser.addoption("--mc_realizations", action="store", default="2000",
                     help="Realizations used by the Monte Carlo checks")
    parser.addoption("--seed", action="store", default="20240611",
                     help="Base seed of the simulation checks")


@pytest.fixture(scope="session")
def mc_realizations(request):
    mc_realizations_value = request.config.option.mc_realizations
    if mc_realizations_value is None:
        pytest.skip()
    return int(mc_realizations_value)


@pytest.fixture(scope="session")
def seed(request):
    seed_value = request.config.option.seed
    if seed_value is None:
        pytest.skip()
    return int(seed_value)
