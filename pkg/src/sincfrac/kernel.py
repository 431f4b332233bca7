r"""The normalized sinc, the operator kernel and the special functions.

The fractional derivative of order :math:`\varpi \in (0, 1)` convolves the
first derivative of its operand with

.. math::

    k_\varpi(u) = \frac{\varpi \wp(\varpi)}{1 - \varpi}
        \operatorname{sinc}\left(-\frac{\varpi u}{1 - \varpi}\right),
    \qquad \operatorname{sinc}(x) = \frac{\sin \pi x}{\pi x}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, special

from ._quadrature import integrate_panels
from .errors import ConfigError, DomainError, NumericError

# below this |pi x| the quotient sin(z)/z is replaced by its Taylor series
_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class FracOrder:
    """Order ``varpi`` of the operator together with the normalization value.

    The normalization is only pinned at the endpoints (``norm(0) = norm(1) = 1``),
    so the default is the constant 1. Use :meth:`with_normalization` to supply
    a different normalization function.
    """

    varpi: float
    norm: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.varpi) and 0.0 < self.varpi < 1.0):
            raise DomainError(f"varpi must lie in open interval (0,1), got {self.varpi!r}")
        if not (math.isfinite(self.norm) and self.norm > 0.0):
            raise DomainError(f"norm must be finite and positive, got {self.norm!r}")

    @classmethod
    def with_normalization(cls, varpi: float, normalization: Callable[[float], float]) -> FracOrder:
        return cls(varpi, float(normalization(varpi)))

    @property
    def rate(self) -> float:
        """Kernel frequency ``c = varpi / (1 - varpi)``."""
        return self.varpi / (1.0 - self.varpi)

    @property
    def amplitude(self) -> float:
        """Kernel prefactor ``varpi * norm / (1 - varpi)``, also its sup norm."""
        return self.rate * self.norm


def _check_finite(x) -> None:
    if not np.all(np.isfinite(x)):
        raise DomainError(f"argument must be finite, got {x!r}")


def _nsinc(x):
    z = np.pi * np.asarray(x, dtype=float)
    small = np.abs(z) < _SERIES_CUTOFF
    with np.errstate(invalid="ignore", divide="ignore"):
        quotient = np.sin(z) / z
    z2 = z * z
    series = 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0))
    return np.where(small, series, quotient)


def nsinc(x):
    """Normalized sinc ``sin(pi x) / (pi x)``, equal to 1 at ``x = 0``.

    Accepts scalars or arrays; returns a float for scalar input.
    """
    _check_finite(x)
    out = _nsinc(x)
    return float(out) if np.ndim(out) == 0 else out


def scaled_kernel(order: FracOrder, u):
    """Operator kernel ``(varpi norm / (1 - varpi)) * nsinc(-varpi u / (1 - varpi))``."""
    _check_finite(u)
    out = order.amplitude * _nsinc(-order.rate * np.asarray(u, dtype=float))
    return float(out) if np.ndim(out) == 0 else out


def sine_integral(x: float) -> float:
    """Si(x), the integral of ``sin(u)/u`` from 0 to ``x``."""
    _check_finite(x)
    return float(special.sici(x)[0])


def sine_integral_quad(x: float, rel_tol: float = 1e-13) -> float:
    """Si(x) by adaptive quadrature, split into half periods of ``sin``."""
    _check_finite(x)
    if x == 0.0:
        return 0.0
    sign, x = math.copysign(1.0, x), abs(x)
    edges = np.append(np.arange(0.0, x, math.pi), x)
    total = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(lambda u: _nsinc(u / math.pi), lo, hi, epsabs=0.0,
                                epsrel=rel_tol, limit=100)
        total.append(val)
    return sign * math.fsum(total)


def erfc_fn(x: float) -> float:
    """Complementary error function."""
    return math.erfc(x)


def erfc_quad(x: float, rel_tol: float = 1e-13) -> float:
    """erfc(x) by adaptive quadrature of ``(2/sqrt(pi)) exp(-t^2)`` over ``[x, inf)``."""
    if x < 0.0:
        return 2.0 - erfc_quad(-x, rel_tol)
    val, _ = integrate.quad(lambda t: math.exp(-t * t), x, math.inf, epsabs=0.0,
                            epsrel=rel_tol, limit=200)
    return 2.0 / math.sqrt(math.pi) * val


def mollifier_integral(phi, varpi: float, window: float, rel_tol: float = 1e-13,
                       abs_tol: float = 1e-16, max_panels: int = 20000) -> float:
    """Approximate ``phi(0)`` by ``(1/varpi) * int phi(x) nsinc(x/varpi) dx``.

    The integral runs over ``[-window, window]``; ``phi`` must be negligible
    outside it. Panels are aligned with the kernel zeros ``x = k varpi``.
    """
    if not (math.isfinite(varpi) and varpi > 0.0):
        raise DomainError(f"varpi must be positive, got {varpi!r}")
    if not (math.isfinite(window) and window > 0.0):
        raise ConfigError(f"window must be positive, got {window!r}")
    f = getattr(phi, "f", phi)
    kmax = math.floor(window / varpi)
    zeros = varpi * np.arange(-kmax, kmax + 1)
    breaks = np.concatenate([[-window], zeros[np.abs(zeros) < window], [window]])

    def integrand(x):
        return np.asarray(f(x), dtype=float) * _nsinc(x / varpi) / varpi

    try:
        value, _ = integrate_panels(integrand, breaks, rel_tol, abs_tol, max_panels)
    except NumericError as exc:
        raise NumericError(
            f"mollifier quadrature did not converge (achieved error {exc.error:.3g})",
            estimate=exc.estimate, error=exc.error,
        ) from exc
    return value
