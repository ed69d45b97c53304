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


import json
import os
import pkgutil

import toml

from .params import QuadratureSpec

# Load constants from constants.toml located in the same package
constants = toml.loads(pkgutil.get_data(__package__, "constants.toml").decode())


def _threads_from_environment():
    value = os.environ.get(constants["ENVIRONMENT"]["THREADS_VARIABLE"], "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


class ClientOptions:
    """Represents the run-time options of the Cauchy fields client."""
    def __init__(
        self,
        rel_tol=constants["QUADRATURE"]["REL_TOL"],
        abs_tol=constants["QUADRATURE"]["ABS_TOL"],
        max_subdivisions=constants["QUADRATURE"]["MAX_SUBDIVISIONS"],
        truncation_point=constants["QUADRATURE"]["TRUNCATION_POINT"],
        max_padding=constants["EMBEDDING"]["MAX_PADDING"],
        default_max_lag=constants["ANALYSIS"]["DEFAULT_MAX_LAG"],
        threads=None,
    ):
        self._rel_tol = rel_tol
        self._abs_tol = abs_tol
        self._max_subdivisions = max_subdivisions
        self._truncation_point = truncation_point
        self._max_padding = max_padding
        self._default_max_lag = default_max_lag
        self._threads = threads if threads is not None else _threads_from_environment()

    @property
    def max_padding(self):
        return self._max_padding

    @property
    def default_max_lag(self):
        return self._default_max_lag

    @property
    def threads(self):
        return self._threads

    def quadrature_spec(self) -> QuadratureSpec:
        """Quadrature settings as the value object consumed by the spectral operations."""
        return QuadratureSpec(
            rel_tol=self._rel_tol,
            abs_tol=self._abs_tol,
            max_subdivisions=self._max_subdivisions,
            truncation_point=self._truncation_point,
        )

    def to_dict(self):
        """Convert the ClientOptions object to a dictionary."""
        return {
            "rel_tol": self._rel_tol,
            "abs_tol": self._abs_tol,
            "max_subdivisions": self._max_subdivisions,
            "truncation_point": self._truncation_point,
            "max_padding": self._max_padding,
            "default_max_lag": self._default_max_lag,
            "threads": self._threads,
        }

    def __str__(self):
        """Return a JSON string representation of the ClientOptions object."""
        return json.dumps(self.to_dict(), indent=2)

    def __repr__(self):
        """Return a string representation of the ClientOptions object for debugging."""
        return f"ClientOptions({self.to_dict()})"
