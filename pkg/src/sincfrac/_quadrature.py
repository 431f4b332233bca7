"""Panel-wise adaptive Gauss-Legendre quadrature.

The integrand is evaluated on all active panels at once, so callers pass
vectorized functions. Each panel is accepted when its 12- and 24-point rules
agree to its share of the global tolerance, otherwise it is bisected.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NumericError

_LOW, _HIGH = 12, 24


@lru_cache(maxsize=None)
def _rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _apply(func: Callable[[np.ndarray], np.ndarray], lo: np.ndarray, hi: np.ndarray,
           n: int) -> np.ndarray:
    nodes, weights = _rule(n)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid[:, None] + half[:, None] * nodes[None, :]
    y = np.asarray(func(x), dtype=float)
    return half * (y @ weights)


def integrate_panels(func: Callable[[np.ndarray], np.ndarray], breaks, rel_tol: float,
                     abs_tol: float, max_panels: int) -> tuple[float, float]:
    """Integrate ``func`` over ``[breaks[0], breaks[-1]]``.

    Returns ``(value, error_estimate)``. Raises :class:`NumericError` carrying
    the current estimate when more than ``max_panels`` panels would be needed.
    """
    breaks = np.asarray(breaks, dtype=float)
    lo, hi = breaks[:-1], breaks[1:]
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]
    length = float(breaks[-1] - breaks[0])
    if length == 0.0 or lo.size == 0:
        return 0.0, 0.0

    done: list[float] = []
    done_err = 0.0
    n_done = 0
    while True:
        coarse = _apply(func, lo, hi, _LOW)
        fine = _apply(func, lo, hi, _HIGH)
        err = np.abs(fine - coarse)
        total = math.fsum(done) + float(np.sum(fine))
        budget = max(abs_tol, rel_tol * abs(total))
        ok = err <= budget * (hi - lo) / length
        done.extend(fine[ok].tolist())
        done_err += float(np.sum(err[ok]))
        n_done += int(np.count_nonzero(ok))
        if ok.all():
            return math.fsum(done), done_err
        lo, hi = lo[~ok], hi[~ok]
        if n_done + 2 * lo.size > max_panels:
            raise NumericError(
                f"quadrature needs more than {max_panels} panels",
                estimate=total,
                error=done_err + float(np.sum(err[~ok])),
            )
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
