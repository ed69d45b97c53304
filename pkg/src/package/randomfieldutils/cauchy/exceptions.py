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
"""Random Field Utils Cauchy fields exceptions
   2024 Google
"""


class CauchyFieldError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(CauchyFieldError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """A special function was evaluated at one of its poles."""


class PreconditionError(CauchyFieldError, ValueError):
    """A representation was requested outside its range of validity."""


class DimensionMismatch(CauchyFieldError, ValueError):
    """Two vector arguments (or a vector and a parameter set) differ in length."""


class ConvergenceError(CauchyFieldError):
    """Quadrature stopped before reaching the requested tolerance."""

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class EmbeddingError(CauchyFieldError):
    """No nonnegative-definite circulant embedding was found within the padding cap."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InsufficientData(CauchyFieldError):
    """Too few usable lags or samples for an estimate."""
