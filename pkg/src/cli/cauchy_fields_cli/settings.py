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
"""Run configuration of the Cauchy fields CLI
   2024 Google
"""

# Standard library imports
from typing import List, Literal, Optional, Union

# Third-party imports
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

# Local imports
from randomfieldutils.cauchy import KernelParams, LampertiParams, SheetParams


def parse_sweep(text: str) -> List[float]:
    """Parses a grid given as a:b:logN, a:b:linN or a comma-separated list.

    Raises:
        ValueError: On malformed input.
    """
    if ":" not in text:
        return [float(x) for x in text.split(",") if x.strip()]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"sweep {text!r} must look like a:b:logN or a:b:linN")
    start, stop, spacing = float(parts[0]), float(parts[1]), parts[2]
    kind, count = spacing[:3], spacing[3:]
    if kind not in ("log", "lin") or not count.isdigit() or int(count) < 1:
        raise ValueError(f"sweep spacing {spacing!r} must be logN or linN")
    if kind == "log":
        if not (start > 0 and stop > 0):
            raise ValueError("log sweeps need positive end points")
        return np.geomspace(start, stop, int(count)).tolist()
    return np.linspace(start, stop, int(count)).tolist()


class RunConfig(BaseModel):
    """Validated settings of one CLI run."""
    model_config = ConfigDict(frozen=True, extra="ignore")

    subcommand: Literal["spectrum", "covariance", "simulate", "estimate", "classify", "lamperti"]
    n: int = 1
    alpha: List[float] = []
    beta: List[float] = []
    alpha_beta_product: Optional[float] = None
    sheet: bool = False
    alphas: List[float] = []
    betas: List[float] = []
    omega: List[float] = []
    lag: List[float] = []
    points: int = 1024
    spacing: float = 1.0 / 64
    seed: int = 0
    input: Optional[str] = None
    output: Optional[str] = None
    output_format: Literal["csv", "json", "binary-field"] = "csv"
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_lag: Optional[int] = None
    asymptotes: bool = False
    powered_exp: bool = False
    mode: Literal["FirstSS", "SecondMSS"] = "FirstSS"
    H: List[float] = [0.5]
    t: List[float] = [1.0]
    s: Optional[List[float]] = None
    tau: List[float] = []
    scaling: List[float] = []
    debug: bool = False

    @field_validator("n")
    @classmethod
    def _dimension(cls, value):
        if value < 1:
            raise ValueError("n must be a positive integer")
        return value

    @field_validator("rel_tol", "abs_tol")
    @classmethod
    def _positive(cls, value):
        if not value > 0:
            raise ValueError("tolerances must be > 0")
        return value

    @model_validator(mode="after")
    def _kernel_given(self):
        if self.subcommand == "estimate":
            if not self.input:
                raise ValueError("estimate needs --input")
            return self
        if self.sheet:
            if not self.alphas or len(self.alphas) != len(self.betas):
                raise ValueError("--sheet needs --alphas and --betas of equal length")
        elif not self.alpha:
            raise ValueError("--alpha is required")
        elif not self.beta and self.alpha_beta_product is None:
            raise ValueError("give --beta or --alpha-beta-product")
        return self

    def kernels(self) -> List[Union[KernelParams, SheetParams]]:
        """Parameter sets of the run; alpha and beta lists are crossed, or beta = product / alpha."""
        if self.sheet:
            return [SheetParams(alphas=tuple(self.alphas), betas=tuple(self.betas))]
        if self.alpha_beta_product is not None:
            return [
                KernelParams(alpha=a, beta=self.alpha_beta_product / a if a else float("nan"), dim=self.n)
                for a in self.alpha
            ]
        return [KernelParams(alpha=a, beta=b, dim=self.n) for a in self.alpha for b in self.beta]

    def lamperti(self) -> LampertiParams:
        base = self.kernels()[0]
        hurst = self.H[0] if self.mode == "FirstSS" else tuple(self.H) if len(self.H) > 1 else self.H[0]
        return LampertiParams(mode=self.mode, H=hurst, base=base)
