r"""The sinc-kernel fractional derivative and its higher-order extension.

For :math:`a \le \mu` and order :math:`\varpi \in (0, 1)`,

.. math::

    {}_aD_\mu^{(\varpi)}\Pi(\mu) = \frac{\varpi\wp(\varpi)}{1-\varpi}
        \int_a^\mu \operatorname{sinc}\left(-\frac{\varpi(\mu-x)}{1-\varpi}\right)
        \Pi'(x)\,dx .

The kernel oscillates with period ``2/c`` (``c = varpi/(1-varpi)``), so the
interval is cut at the kernel zeros ``x = mu - k/c`` before Gauss-Legendre
panels are applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from ._quadrature import integrate_panels
from .errors import ConfigError, DomainError
from .functions import FunctionSpec
from .kernel import FracOrder, _nsinc, sine_integral

PanelStrategy = Literal["kernel-zeros", "uniform"]

# fewer kernel zeros than this inside [a, mu] -> uniform panels instead
_MIN_ZEROS = 4
_UNIFORM_PANELS = 4


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_panels: int = 5000
    panel_strategy: PanelStrategy = "kernel-zeros"

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ConfigError("rel_tol and abs_tol must be positive")
        if self.max_panels < 1:
            raise ConfigError(f"max_panels must be >= 1, got {self.max_panels}")
        if self.panel_strategy not in ("kernel-zeros", "uniform"):
            raise ConfigError(f"unknown panel_strategy {self.panel_strategy!r}")


DEFAULT_QUADRATURE = QuadratureConfig()


def _breaks(a: float, mu: float, c: float, strategy: str) -> np.ndarray:
    span = mu - a
    if strategy == "kernel-zeros":
        k = np.arange(1, math.floor(c * span) + 1)
        zeros = mu - k / c
        zeros = zeros[zeros > a]
        if zeros.size >= _MIN_ZEROS:
            return np.concatenate([[a], zeros[::-1], [mu]])
        return np.linspace(a, mu, _UNIFORM_PANELS + 1)
    n = max(_UNIFORM_PANELS, math.ceil(c * span))
    return np.linspace(a, mu, n + 1)


def frac_derivative(fn: FunctionSpec, a: float, mu: float, order: FracOrder,
                    quad: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Fractional derivative of ``fn`` on ``[a, mu]``.

    Raises :class:`DomainError` for ``a > mu`` and :class:`NumericError` when
    the quadrature exceeds ``quad.max_panels``.
    """
    if not (math.isfinite(a) and math.isfinite(mu)):
        raise DomainError(f"a and mu must be finite, got a={a!r}, mu={mu!r}")
    if a > mu:
        raise DomainError(f"need a <= mu, got a={a!r}, mu={mu!r}")
    if a == mu:
        return 0.0
    c = order.rate
    amp = order.amplitude

    def integrand(x):
        return amp * _nsinc(-c * (mu - x)) * np.asarray(fn.derivative(x), dtype=float)

    value, _ = integrate_panels(integrand, _breaks(a, mu, c, quad.panel_strategy),
                                quad.rel_tol, quad.abs_tol, quad.max_panels)
    return value


def _stencil(offsets: np.ndarray, n: int) -> np.ndarray:
    """Finite-difference weights for the n-th derivative on integer offsets."""
    m = offsets.size
    powers = np.vander(offsets.astype(float), m, increasing=True).T
    rhs = np.zeros(m)
    rhs[n] = math.factorial(n)
    return np.linalg.solve(powers, rhs)


def frac_derivative_higher(fn: FunctionSpec, a: float, mu: float, n: int, order: FracOrder,
                           quad: QuadratureConfig = DEFAULT_QUADRATURE,
                           step: float | None = None) -> float:
    """Order ``n + varpi``: the n-th derivative in ``mu`` of :func:`frac_derivative`.

    The outer derivative uses an O(h^2) finite-difference stencil, central when
    it fits inside ``[a, inf)`` and one-sided otherwise. The default step is
    ``1e-12 ** (1 / (n + 2))``, balancing truncation against quadrature noise.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if n == 0:
        return frac_derivative(fn, a, mu, order, quad)
    if not (math.isfinite(a) and math.isfinite(mu)) or a > mu:
        raise DomainError(f"need finite a <= mu, got a={a!r}, mu={mu!r}")
    h = step if step is not None else 1e-12 ** (1.0 / (n + 2))
    half = (n + 1) // 2
    if mu - half * h >= a:
        offsets = np.arange(-half, half + 1)
    else:
        offsets = np.arange(0, n + 2)
    weights = _stencil(offsets, n)
    values = [frac_derivative(fn, a, mu + k * h, order, quad) for k in offsets]
    return math.fsum(w * v for w, v in zip(weights, values)) / h**n


def linear_case_closed_form(mu: float, order: FracOrder) -> float:
    """Closed form for ``Pi(x) = x`` with ``a = 0``: ``norm * Si(pi c mu) / pi``."""
    if mu < 0:
        raise DomainError(f"mu must be non-negative, got {mu!r}")
    return order.norm * sine_integral(math.pi * order.rate * mu) / math.pi


@dataclass(frozen=True)
class LimitProbe:
    """Derivative values across orders next to the two endpoint references.

    ``slope_at_mu`` is ``Pi'(mu)`` and ``increment`` is ``Pi(mu) - Pi(a)``;
    nothing is asserted about which one the values approach.
    """

    orders: np.ndarray
    values: np.ndarray
    slope_at_mu: float
    increment: float

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.orders.tolist(), self.values.tolist()))


def limit_probe(fn: FunctionSpec, a: float, mu: float, orders: Sequence[float],
                quad: QuadratureConfig = DEFAULT_QUADRATURE, norm: float = 1.0) -> LimitProbe:
    fracs = [FracOrder(v, norm) for v in orders]
    values = np.array([frac_derivative(fn, a, mu, o, quad) for o in fracs])
    slope = float(np.asarray(fn.derivative(np.asarray(mu, dtype=float))))
    increment = float(np.asarray(fn(np.asarray(mu, dtype=float)))
                      - np.asarray(fn(np.asarray(a, dtype=float))))
    return LimitProbe(np.asarray(orders, dtype=float), values, slope, increment)
