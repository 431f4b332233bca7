"""Operand functions and the built-in catalogue used by the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import special

from .errors import ConfigError

_CHECK_STEP = 1e-4
_CHECK_TOL = 1e-4


@dataclass(frozen=True)
class FunctionSpec:
    """A scalar function with an optional analytic first derivative.

    ``f`` and ``d1`` must accept numpy arrays. Without ``d1`` the derivative is
    taken by central differences with step ``fd_step``. When ``d1`` is given it
    is checked against a central difference at the ``probes`` points.
    """

    f: Callable
    d1: Callable | None = None
    fd_step: float = 1e-5
    probes: tuple[float, ...] = (0.25, 0.5, 1.0)

    def __post_init__(self) -> None:
        if not (0.0 < self.fd_step <= 0.1):
            raise ConfigError(f"fd_step must lie in (0, 0.1], got {self.fd_step!r}")
        if self.d1 is None:
            return
        x = np.asarray(self.probes, dtype=float)
        h = _CHECK_STEP
        central = (np.asarray(self.f(x + h)) - np.asarray(self.f(x - h))) / (2 * h)
        given = np.asarray(self.d1(x), dtype=float)
        bad = np.abs(given - central) > _CHECK_TOL * np.maximum(1.0, np.abs(given))
        if np.any(bad):
            raise ConfigError(
                "analytic derivative disagrees with central differences at "
                f"x={x[bad].tolist()}"
            )

    def __call__(self, x):
        return self.f(x)

    def derivative(self, x):
        if self.d1 is not None:
            return self.d1(x)
        h = self.fd_step
        return (np.asarray(self.f(x + h)) - np.asarray(self.f(x - h))) / (2 * h)


def _gaussian_laplace(s):
    # L{exp(-t^2/2)}(s) = sqrt(pi/2) exp(s^2/2) erfc(s/sqrt 2), written with erfcx
    return math.sqrt(math.pi / 2) * special.erfcx(s / math.sqrt(2))


@dataclass(frozen=True)
class CatalogueEntry:
    spec: FunctionSpec
    laplace: Callable
    value_at_zero: float
    fourier: Callable | None = None
    description: str = field(default="", compare=False)

    def sumudu(self, zeta):
        return self.laplace(1.0 / zeta) / zeta


def _const(x):
    return np.ones_like(np.asarray(x, dtype=float))


def _zero(x):
    return np.zeros_like(np.asarray(x, dtype=float))


CATALOGUE: dict[str, CatalogueEntry] = {
    "constant": CatalogueEntry(
        FunctionSpec(_const, _zero), lambda s: 1.0 / s, 1.0,
        description="Pi(x) = 1",
    ),
    "linear": CatalogueEntry(
        FunctionSpec(lambda x: np.asarray(x, dtype=float), _const),
        lambda s: 1.0 / s**2, 0.0,
        description="Pi(x) = x",
    ),
    "quadratic": CatalogueEntry(
        FunctionSpec(lambda x: np.asarray(x, dtype=float) ** 2, lambda x: 2.0 * np.asarray(x)),
        lambda s: 2.0 / s**3, 0.0,
        description="Pi(x) = x^2",
    ),
    "exp-decay": CatalogueEntry(
        FunctionSpec(lambda x: np.exp(-np.asarray(x)), lambda x: -np.exp(-np.asarray(x))),
        lambda s: 1.0 / (s + 1.0), 1.0,
        description="Pi(x) = exp(-x)",
    ),
    "sine": CatalogueEntry(
        FunctionSpec(np.sin, np.cos), lambda s: 1.0 / (s**2 + 1.0), 0.0,
        description="Pi(x) = sin(x)",
    ),
    "gaussian": CatalogueEntry(
        FunctionSpec(lambda x: np.exp(-0.5 * np.asarray(x) ** 2),
                     lambda x: -np.asarray(x) * np.exp(-0.5 * np.asarray(x) ** 2)),
        _gaussian_laplace, 1.0,
        fourier=lambda xi: np.exp(-0.5 * np.asarray(xi) ** 2),
        description="Pi(x) = exp(-x^2/2)",
    ),
}
