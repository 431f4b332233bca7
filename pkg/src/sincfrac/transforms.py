r"""Fourier, Laplace and Sumudu images of the kernel and of the operator.

Conventions: the Fourier transform is unitary with kernel
:math:`e^{-i\xi x}/\sqrt{2\pi}`; the Sumudu transform is realized through
:math:`G(\zeta) = F(1/\zeta)/\zeta` where :math:`F` is the Laplace image.

The closed forms are accompanied by numerical forward transforms
(:func:`numerical_laplace`, :func:`numerical_sumudu`,
:func:`numerical_fourier_kernel`) that serve as independent checks.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple

import numpy as np
from scipy import integrate

from .errors import DomainError, NumericError
from .kernel import FracOrder, _nsinc

FourierMode = Literal["as-paper", "band-limited"]
SumuduMode = Literal["dual", "as-paper"]

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class FourierImage:
    """Function of angular frequency ``xi`` (real) to a complex value."""

    func: Callable

    def __call__(self, xi):
        return self.func(xi)


@dataclass(frozen=True)
class LaplaceImage:
    """Function of ``s`` (``Re s > 0``) to a real or complex value."""

    func: Callable

    def __call__(self, s):
        return self.func(s)


@dataclass(frozen=True)
class SumuduImage:
    """Function of ``zeta > 0``."""

    func: Callable

    def __call__(self, zeta):
        return self.func(zeta)


def _heaviside(x: float) -> float:
    if x > 0:
        return 1.0
    return 0.5 if x == 0 else 0.0


def _cutoff_step(order: FracOrder, xi: float, mode: str) -> float:
    edge = math.pi * order.rate
    if mode == "as-paper":
        return _heaviside(edge + abs(xi))
    if mode == "band-limited":
        return _heaviside(edge - abs(xi))
    raise DomainError(f"unknown Fourier mode {mode!r}")


def fourier_image_kernel(order: FracOrder, xi: float, mode: FourierMode = "as-paper") -> float:
    """Fourier image of ``nsinc(-c x)``.

    ``"as-paper"`` keeps the Heaviside argument ``c pi + |xi|``, which is
    always positive, so the image is constant in ``xi``. ``"band-limited"``
    uses ``c pi - |xi|``, the rectangular spectrum of a sinc. The step takes
    the value 1/2 on the cutoff.
    """
    if not math.isfinite(xi):
        raise DomainError(f"xi must be finite, got {xi!r}")
    return _INV_SQRT_2PI / order.rate * _cutoff_step(order, xi, mode)


def fourier_image_operator(pi_hat, xi: float, order: FracOrder,
                           mode: FourierMode = "as-paper") -> complex:
    """``i xi sqrt(1/2pi) norm H(.) Pi(xi)``; ``pi_hat`` is a value or a callable."""
    if not math.isfinite(xi):
        raise DomainError(f"xi must be finite, got {xi!r}")
    value = pi_hat(xi) if callable(pi_hat) else pi_hat
    return 1j * xi * _INV_SQRT_2PI * order.norm * _cutoff_step(order, xi, mode) * complex(value)


def _check_half_plane(s) -> None:
    if not (complex(s).real > 0.0):
        raise DomainError(f"need Re(s) > 0, got s={s!r}")


def _arctan(z):
    # principal branch, cuts on (-i inf, -i] and [i, i inf)
    if isinstance(z, complex):
        return cmath.atan(z)
    return math.atan(z)


def laplace_image_kernel(order: FracOrder, s):
    """Laplace image of ``nsinc(-c t)``: ``arctan(pi c / s) / (pi c)``."""
    _check_half_plane(s)
    pc = math.pi * order.rate
    return _arctan(pc / s) / pc


def laplace_image_operator(pi_s, pi_0, s, order: FracOrder):
    """Laplace image of the derivative: ``(norm/pi) arctan(pi c/s) (s Pi(s) - Pi(0))``."""
    _check_half_plane(s)
    pc = math.pi * order.rate
    return order.norm / math.pi * _arctan(pc / s) * (s * pi_s - pi_0)


def sumudu_image_kernel(order: FracOrder, zeta: float) -> float:
    """Sumudu image of ``nsinc(-c t)``: ``arctan(pi c zeta) / (pi c zeta)``."""
    if not zeta > 0:
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    y = math.pi * order.rate * zeta
    if y < 1e-8:
        return 1.0 - y * y / 3.0
    return math.atan(y) / y


def sumudu_image_operator(pi_zeta, pi_0, zeta: float, order: FracOrder,
                          mode: SumuduMode = "dual"):
    """Sumudu image of the derivative.

    ``"dual"`` (default) is ``(norm/(pi zeta)) arctan(pi c zeta) (Pi(zeta) - Pi(0))``,
    the image obtained from the Laplace image under ``G(zeta) = F(1/zeta)/zeta``
    and from the Sumudu convolution rule. ``"as-paper"`` carries an extra
    ``1/zeta`` factor on the difference quotient, as the displayed formula does;
    it equals ``dual / zeta``.
    """
    if not zeta > 0:
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    pcz = math.pi * order.rate * zeta
    base = order.norm / (math.pi * zeta) * math.atan(pcz) * (pi_zeta - pi_0)
    if mode == "dual":
        return base
    if mode == "as-paper":
        return base / zeta
    raise DomainError(f"unknown Sumudu mode {mode!r}")


class TransformEstimate(NamedTuple):
    """Numerical transform value with its quadrature error and tail estimate."""

    value: float | complex
    error: float
    tail: float
    t_max: float


def _choose_t_max(fn: Callable, sigma: float, abs_tol: float) -> float:
    t = 32.0 / sigma
    for _ in range(8):
        probe = max(abs(fn(t)), abs(fn(0.9 * t)))
        if probe * math.exp(-sigma * t) < abs_tol / 10:
            return t
        t *= 1.5
    return t


def _quad(func: Callable, lo: float, hi: float, rel_tol: float, abs_tol: float) -> tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            return integrate.quad(func, lo, hi, epsabs=abs_tol, epsrel=rel_tol, limit=1000)
        except integrate.IntegrationWarning as exc:
            raise NumericError(f"forward transform quadrature failed: {exc}") from exc


def numerical_laplace(fn: Callable[[float], float], s, t_max: float | None = None,
                      rel_tol: float = 1e-11, abs_tol: float = 1e-13) -> TransformEstimate:
    """Adaptive quadrature of ``int_0^t_max exp(-s t) fn(t) dt``.

    ``fn`` is called with scalar floats. Without ``t_max`` the cut is placed
    where ``|fn(t)| exp(-Re(s) t)`` drops below ``abs_tol / 10``. The tail
    estimate assumes ``|fn|`` does not grow beyond its value at the cut.
    """
    _check_half_plane(s)
    s = complex(s)
    sigma = s.real
    if t_max is None:
        t_max = _choose_t_max(fn, sigma, abs_tol)
    elif not t_max > 0:
        raise DomainError(f"t_max must be positive, got {t_max!r}")
    if s.imag == 0.0:
        sr = s.real
        value, err = _quad(lambda t: math.exp(-sr * t) * fn(t), 0.0, t_max, rel_tol, abs_tol)
    else:
        re, err_re = _quad(lambda t: (cmath.exp(-s * t) * fn(t)).real, 0.0, t_max, rel_tol, abs_tol)
        im, err_im = _quad(lambda t: (cmath.exp(-s * t) * fn(t)).imag, 0.0, t_max, rel_tol, abs_tol)
        value, err = complex(re, im), math.hypot(err_re, err_im)
    tail = abs(fn(t_max)) * math.exp(-sigma * t_max) / sigma
    return TransformEstimate(value, err, tail, t_max)


def numerical_sumudu(fn: Callable[[float], float], zeta: float, **kwargs) -> TransformEstimate:
    """Sumudu transform through the Laplace duality ``G(zeta) = F(1/zeta)/zeta``."""
    if not zeta > 0:
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    est = numerical_laplace(fn, 1.0 / zeta, **kwargs)
    return TransformEstimate(est.value / zeta, est.error / zeta, est.tail / zeta, est.t_max)


def _sine_over_x(b: float, x_split: float, rel_tol: float) -> float:
    """``int_0^inf sin(b x)/x dx`` by quadrature: finite part plus a QAWF tail."""
    if b == 0.0:
        return 0.0
    head, _ = integrate.quad(lambda x: b * _nsinc(b * x / math.pi), 0.0, x_split,
                             epsabs=1e-14, epsrel=rel_tol, limit=2000)
    tail, _ = integrate.quad(lambda x: 1.0 / x, x_split, math.inf, weight="sin", wvar=b,
                             epsabs=1e-12, limlst=200)
    return head + tail


def numerical_fourier_kernel(order: FracOrder, xi: float, window: float = 50.0,
                             rel_tol: float = 1e-10) -> float:
    """Unitary Fourier transform of ``nsinc(-c x)`` by direct quadrature.

    The kernel is even, so the transform is ``(2/sqrt(2pi)) int_0^inf
    nsinc(c x) cos(xi x) dx``; the product is split into two sine integrals
    whose finite parts on ``[0, window]`` use adaptive quadrature and whose
    tails use Fourier-weighted quadrature.
    """
    pc = math.pi * order.rate
    total = _sine_over_x(pc + xi, window, rel_tol) + _sine_over_x(pc - xi, window, rel_tol)
    return _INV_SQRT_2PI / pc * total
