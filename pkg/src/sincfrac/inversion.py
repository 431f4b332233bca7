"""Numerical inverse Laplace and inverse Sumudu transforms.

Gaver-Stehfest is the default: it only samples the image on the real axis
at ``s_k = k ln2 / t``, where the square roots and arctangents of the heat
solutions are single-valued. Fixed Talbot is available for images that are
analytic off the negative real axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Literal

import numpy as np

from .errors import ConfigError, DomainError, InversionError, SincFracError

Method = Literal["stehfest", "talbot"]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class InversionConfig:
    """Inversion settings.

    ``nested_order`` is the Stehfest order used on each axis of a double
    inversion (space-fractional model); roundoff there grows like the square
    of the weight magnitudes, so it is kept below ``stehfest_order``.
    """

    method: Method = "stehfest"
    stehfest_order: int = 14
    talbot_nodes: int = 32
    talbot_scale: float = 0.4
    nested_order: int = 10

    def __post_init__(self) -> None:
        if self.method not in ("stehfest", "talbot"):
            raise ConfigError(f"unknown inversion method {self.method!r}")
        _check_order(self.stehfest_order, "stehfest_order")
        _check_order(self.nested_order, "nested_order")
        if self.talbot_nodes < 8:
            raise ConfigError(f"talbot_nodes must be >= 8, got {self.talbot_nodes}")
        if not self.talbot_scale > 0:
            raise ConfigError(f"talbot_scale must be positive, got {self.talbot_scale}")


def _check_order(n, name: str = "n") -> None:
    if int(n) != n or n % 2 or not 2 <= n <= 20:
        raise ConfigError(f"{name} must be an even integer in [2, 20], got {n!r}")


@lru_cache(maxsize=None)
def stehfest_weights(n: int) -> tuple[Fraction, ...]:
    """Gaver-Stehfest weights ``V_1 .. V_n`` as exact rationals.

    They satisfy ``sum V_k = 0`` and ``sum V_k / k = 1`` exactly; the
    inverter converts them to floats once.
    """
    _check_order(n)
    half = n // 2
    f = math.factorial
    weights = []
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range((k + 1) // 2, min(k, half) + 1):
            acc += Fraction(j**half * f(2 * j),
                            f(half - j) * f(j) * f(j - 1) * f(k - j) * f(2 * j - k))
        weights.append(acc if (k + half) % 2 == 0 else -acc)
    return tuple(weights)


@lru_cache(maxsize=None)
def float_weights(n: int) -> np.ndarray:
    w = np.array([float(v) for v in stehfest_weights(n)])
    w.flags.writeable = False
    return w


def stehfest_abscissae(t: float, n: int) -> np.ndarray:
    return np.arange(1, n + 1) * (LN2 / t)


def _evaluate(image: Callable, s):
    try:
        return image(s)
    except SincFracError as exc:
        raise InversionError(f"image evaluation failed at s={s!r}: {exc}", s) from exc
    except (ArithmeticError, ValueError) as exc:
        raise InversionError(f"image evaluation failed at s={s!r}: {exc}", s) from exc


def _stehfest(image: Callable, t: float, n: int) -> float:
    weights = float_weights(n)
    values = [_evaluate(image, float(s)) for s in stehfest_abscissae(t, n)]
    return LN2 / t * math.fsum(float(np.real(v)) * w for v, w in zip(values, weights))


def _talbot(image: Callable, t: float, m: int, scale: float) -> float:
    # fixed Talbot contour s(theta) = r theta (cot theta + i)
    r = scale * m / t
    acc = [0.5 * math.exp(r * t) * complex(_evaluate(image, complex(r, 0.0))).real]
    for k in range(1, m):
        theta = k * math.pi / m
        cot = math.cos(theta) / math.sin(theta)
        s = r * theta * complex(cot, 1.0)
        sigma = theta + (theta * cot - 1.0) * cot
        term = cmath.exp(t * s) * complex(_evaluate(image, s)) * complex(1.0, sigma)
        acc.append(term.real)
    return r / m * math.fsum(acc)


def laplace_invert(image: Callable, t: float, cfg: InversionConfig = InversionConfig()) -> float:
    """Value at ``t > 0`` of the original whose Laplace image is ``image``."""
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t must be positive, got {t!r}")
    if cfg.method == "stehfest":
        return _stehfest(image, t, cfg.stehfest_order)
    return _talbot(image, t, cfg.talbot_nodes, cfg.talbot_scale)


def sumudu_invert(image: Callable, mu: float, cfg: InversionConfig = InversionConfig()) -> float:
    """Inverse Sumudu transform at ``mu > 0`` via ``F(s) = G(1/s)/s``."""
    if not (math.isfinite(mu) and mu > 0):
        raise DomainError(f"mu must be positive, got {mu!r}")
    return laplace_invert(lambda s: image(1.0 / s) / s, mu, cfg)
