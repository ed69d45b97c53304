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
"""Random Field Utils Cauchy fields package
   2024 Google
"""
from .version import __version__
from .client import Client
from .client_options import ClientOptions
from .exceptions import (
    CauchyFieldError,
    ConvergenceError,
    DimensionMismatch,
    DomainError,
    EmbeddingError,
    InsufficientData,
    PoleError,
    PreconditionError,
)
from .params import (
    AsymptoticSeries,
    DependenceVerdict,
    EmbeddingReport,
    FieldGrid,
    GridSpec,
    IntegralWitness,
    KernelParams,
    LampertiParams,
    QuadratureSpec,
    SheetParams,
    SpectralValue,
    VariogramFit,
)

__all__ = [
    'Client',
    'ClientOptions',
    'CauchyFieldError',
    'ConvergenceError',
    'DimensionMismatch',
    'DomainError',
    'EmbeddingError',
    'InsufficientData',
    'PoleError',
    'PreconditionError',
    'AsymptoticSeries',
    'DependenceVerdict',
    'EmbeddingReport',
    'FieldGrid',
    'GridSpec',
    'IntegralWitness',
    'KernelParams',
    'LampertiParams',
    'QuadratureSpec',
    'SheetParams',
    'SpectralValue',
    'VariogramFit',
    '__version__'
]
