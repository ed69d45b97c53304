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
"""Random Field Utils Cauchy fields special functions
   2024 Google
"""
# Standard library imports
import cmath
import math

# Third-party imports
from scipy import special

# Local imports
from .exceptions import DomainError, PoleError


def _is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    Args:
        x (float): Argument, not a non-positive integer.

    Returns:
        float: Gamma(x).

    Raises:
        PoleError: If x is 0, -1, -2, ...
        OverflowError: If |Gamma(x)| is not representable as a double.
    """
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"gamma has a pole at x={x}")
    value = special.gamma(x)
    if not math.isfinite(value):
        raise OverflowError(f"gamma({x}) overflows double precision")
    return float(value)


def log_gamma(x: float) -> float:
    """ln|Gamma(x)|, finite well past the overflow point of gamma."""
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"gamma has a pole at x={x}")
    return float(special.gammaln(x))


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x); zero at the poles of gamma."""
    return float(special.rgamma(float(x)))


def digamma(x: float) -> float:
    """Logarithmic derivative of the gamma function.

    Raises:
        PoleError: If x is a non-positive integer.
    """
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"digamma has a pole at x={x}")
    return float(special.psi(x))


def beta_function(x: float, y: float) -> float:
    """B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y) for positive arguments."""
    if x <= 0 or y <= 0:
        raise DomainError(f"beta_function needs positive arguments, got ({x}, {y})")
    value = special.beta(float(x), float(y))
    if not math.isfinite(value):
        raise OverflowError(f"beta({x}, {y}) overflows double precision")
    return float(value)


def bessel_j(nu: float, z: float) -> float:
    """Bessel function of the first kind J_nu(z) for z >= 0.

    Args:
        nu (float): Order, >= -1/2.
        z (float): Argument, >= 0.

    Raises:
        DomainError: If z < 0 or nu < -1/2.
    """
    if z < 0:
        raise DomainError(f"bessel_j needs z >= 0, got {z}")
    if nu < -0.5:
        raise DomainError(f"bessel_j supports orders nu >= -1/2, got {nu}")
    if z == 0 and nu < 0:
        raise OverflowError(f"J_{nu}(0) is unbounded")
    return float(special.jv(float(nu), float(z)))


def bessel_k(nu: float, z: float) -> float:
    """Modified Bessel function of the second kind K_nu(z) for z > 0.

    K is even in nu; the order is folded to |nu| so the symmetry holds bitwise.

    Raises:
        DomainError: If z <= 0.
        OverflowError: If K_nu(z) exceeds double precision as z approaches 0.
    """
    if not z > 0:
        raise DomainError(f"bessel_k needs z > 0, got {z}")
    value = special.kv(abs(float(nu)), float(z))
    if not math.isfinite(value):
        raise OverflowError(f"K_{nu}({z}) overflows double precision")
    return float(value)


def bessel_k_scaled(nu: float, z: float) -> float:
    """e^z K_nu(z), usable where K_nu itself underflows."""
    if not z > 0:
        raise DomainError(f"bessel_k_scaled needs z > 0, got {z}")
    return float(special.kve(abs(float(nu)), float(z)))


def complex_pow_denominator(u: float, alpha: float, beta: float) -> complex:
    """(1 + e^{i pi alpha/2} u^alpha)^(-beta) on the principal branch.

    For alpha in (0, 2) the base has positive imaginary part for u > 0, so it
    never touches the branch cut of the complex power.

    Args:
        u (float): Radial variable, > 0.
        alpha (float): Index in (0, 2).
        beta (float): Exponent, > 0.

    Returns:
        complex: The principal value.
    """
    if not 0 < alpha < 2:
        raise DomainError(f"complex_pow_denominator needs alpha in (0, 2), got {alpha}")
    if not beta > 0:
        raise DomainError(f"complex_pow_denominator needs beta > 0, got {beta}")
    if u < 0:
        raise DomainError(f"complex_pow_denominator needs u > 0, got {u}")
    if u == 0:
        return complex(1.0, 0.0)
    base = 1.0 + cmath.exp(0.5j * math.pi * alpha) * u ** alpha
    assert base.imag > 0 or base.real > 0, f"base {base} for u={u}, alpha={alpha} lies on the branch cut"
    # exp(-beta*log(base)) keeps large u from overflowing the intermediate power
    return cmath.exp(-beta * cmath.log(base))
