"""Semi-infinite heat-diffusion models solved in the transform domain.

Three models share the boundary data ``Pi(0, tau) = lambda(tau)``, zero
initial temperature and decay as ``mu -> inf``:

* ``classical``: ``Pi_tau = kappa Pi_mumu``, Laplace solution
  ``lambda(s) exp(-mu sqrt(s/kappa))``;
* ``time-fractional``: the fractional derivative acts in ``tau``, Laplace
  solution ``lambda(s) exp(-mu sqrt(H))``;
* ``space-fractional``: the fractional derivative acts in ``mu``; solved as a
  Sumudu image in ``mu`` and a Laplace image in ``tau`` and inverted twice.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np

from .errors import ConfigError, DomainError, SingularityError
from .inversion import (LN2, InversionConfig, float_weights, laplace_invert,
                        stehfest_abscissae)
from .kernel import FracOrder, erfc_fn

Model = Literal["time-fractional", "space-fractional", "classical"]
MODELS = ("time-fractional", "space-fractional", "classical")


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary temperature ``lambda(tau)`` at ``mu = 0``.

    ``step`` is ``amplitude`` for all ``tau > 0`` (image ``amplitude/s``),
    ``ramp`` is ``amplitude * tau`` (image ``amplitude/s^2``) and ``custom``
    takes its Laplace image from ``custom_image``.
    """

    kind: Literal["step", "ramp", "custom"] = "step"
    amplitude: float = 1.0
    custom_image: Callable | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("step", "ramp", "custom"):
            raise ConfigError(f"unknown boundary kind {self.kind!r}")
        if self.kind == "custom":
            if self.custom_image is None:
                raise ConfigError("custom boundary needs custom_image")
        elif not math.isfinite(self.amplitude):
            raise ConfigError(f"boundary amplitude must be finite, got {self.amplitude!r}")

    def laplace(self, s):
        if self.kind == "step":
            return self.amplitude / s
        if self.kind == "ramp":
            return self.amplitude / s**2
        return self.custom_image(s)

    def value(self, tau: float) -> float:
        """Time-domain boundary value; only known in closed form for step and ramp."""
        if self.kind == "step":
            return self.amplitude
        if self.kind == "ramp":
            return self.amplitude * tau
        raise DomainError("custom boundaries have no closed-form time-domain value")


@dataclass(frozen=True)
class DiffusionProblem:
    kappa: float
    boundary: BoundarySpec = BoundarySpec()
    model: Model = "time-fractional"
    order: FracOrder | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise DomainError(f"kappa must be positive, got {self.kappa!r}")
        if self.model not in MODELS:
            raise ConfigError(f"unknown model {self.model!r}")
        if self.model != "classical" and self.order is None:
            raise ConfigError(f"model {self.model!r} needs an order")


@dataclass
class SolutionGrid:
    """``values[i, j] = Pi(mu[i], tau[j])``.

    Points where the space-fractional image crosses its pole are flagged in
    ``flags`` and hold NaN; every unflagged value is finite.
    """

    mu: np.ndarray
    tau: np.ndarray
    values: np.ndarray
    flags: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.mu = np.asarray(self.mu, dtype=float)
        self.tau = np.asarray(self.tau, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.flags is None:
            self.flags = np.zeros(self.values.shape, dtype=bool)
        if self.values.shape != (self.mu.size, self.tau.size) or self.flags.shape != self.values.shape:
            raise ValueError("grid dimensions are inconsistent")
        if not np.isfinite(self.values[~self.flags]).all():
            raise ValueError("unflagged grid values must be finite")

    @property
    def any_flagged(self) -> bool:
        return bool(self.flags.any())


def _check_grid(mu, tau) -> tuple[np.ndarray, np.ndarray]:
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    if not (np.isfinite(mu).all() and np.isfinite(tau).all()):
        raise DomainError("grid points must be finite")
    if (mu < 0).any() or (tau <= 0).any():
        raise DomainError("need mu >= 0 and tau > 0 on the grid")
    if (np.diff(mu) <= 0).any() or (np.diff(tau) <= 0).any():
        raise DomainError("grid points must be strictly increasing")
    return mu, tau


def _half_plane(s) -> None:
    if not complex(s).real > 0:
        raise DomainError(f"need Re(s) > 0, got s={s!r}")


def _sqrt(z):
    return cmath.sqrt(z) if isinstance(z, complex) else math.sqrt(z)


def _atan(z):
    return cmath.atan(z) if isinstance(z, complex) else math.atan(z)


def h_factor(s, order: FracOrder, kappa: float):
    """``H = (norm s / (pi kappa)) arctan(pi c / s)``, the squared decay rate."""
    _half_plane(s)
    if not kappa > 0:
        raise DomainError(f"kappa must be positive, got {kappa!r}")
    pc = math.pi * order.rate
    return order.norm * s / (math.pi * kappa) * _atan(pc / s)


def timefrac_laplace_solution(mu: float, s, prob: DiffusionProblem):
    if mu < 0:
        raise DomainError(f"mu must be non-negative, got {mu!r}")
    if prob.model != "time-fractional":
        raise ConfigError(f"expected a time-fractional problem, got {prob.model!r}")
    lam = prob.boundary.laplace(s)
    if mu == 0:
        return lam
    return lam * (cmath.exp if isinstance(s, complex) else math.exp)(
        -mu * _sqrt(h_factor(s, prob.order, prob.kappa)))


def classical_laplace_solution(mu: float, s, prob: DiffusionProblem):
    if mu < 0:
        raise DomainError(f"mu must be non-negative, got {mu!r}")
    _half_plane(s)
    return _classical_image(mu, s, prob)


def _classical_image(mu: float, s, prob: DiffusionProblem):
    # analytic off the negative real axis, so contour methods may call it with Re(s) <= 0
    lam = prob.boundary.laplace(s)
    if mu == 0:
        return lam
    if isinstance(s, complex):
        return lam * cmath.exp(-mu * cmath.sqrt(s / prob.kappa))
    return lam * math.exp(-mu * math.sqrt(s / prob.kappa))


def classical_closed_form(mu: float, tau: float, kappa: float, lambda0: float) -> float:
    """Step-boundary solution ``lambda0 erfc(mu / (2 sqrt(kappa tau)))``."""
    if not (tau > 0 and kappa > 0 and mu >= 0):
        raise DomainError("need tau > 0, kappa > 0 and mu >= 0")
    return lambda0 * erfc_fn(mu / (2.0 * math.sqrt(kappa * tau)))


def _sumudu_coefficient(zeta, order: FracOrder):
    """``A(zeta) = norm arctan(pi c zeta) / (pi zeta^2)``."""
    return order.norm / (np.pi * zeta**2) * np.arctan(np.pi * order.rate * zeta)


def spacefrac_sumudu_solution(zeta: float, s, prob: DiffusionProblem):
    """Sumudu-in-``mu``, Laplace-in-``tau`` image ``A lambda(s) / (A - s zeta / kappa)``.

    Raises :class:`SingularityError` on the pole ``A(zeta) = s zeta / kappa``.
    """
    if not zeta > 0:
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    _half_plane(s)
    if prob.model != "space-fractional":
        raise ConfigError(f"expected a space-fractional problem, got {prob.model!r}")
    a = float(_sumudu_coefficient(zeta, prob.order))
    denom = a - s * zeta / prob.kappa
    if denom == 0 or abs(denom) <= 1e-14 * abs(a):
        raise SingularityError(f"pole at zeta={zeta!r}, s={s!r}", zeta, s)
    return a * prob.boundary.laplace(s) / denom


def double_invert(image: Callable, mu: float, tau: float, n: int) -> float:
    """Invert ``image(zeta, s)`` as Sumudu in ``mu`` and Laplace in ``tau``.

    Both axes use Gaver-Stehfest of order ``n``; ``image`` is called with
    broadcastable arrays ``zeta`` (inner) and ``s`` (outer). At ``mu = 0``
    the inner inversion is replaced by the ``zeta -> 0`` limit, supplied by
    calling ``image`` with ``zeta = 0``.
    """
    w = float_weights(n)
    s = stehfest_abscissae(tau, n)
    if mu == 0:
        inner = np.asarray(image(np.zeros(1)[None, :], s[:, None]))[:, 0]
    else:
        p = stehfest_abscissae(mu, n)
        g = np.asarray(image(1.0 / p[None, :], s[:, None]))
        inner = LN2 / mu * (g / p[None, :]) @ w
    return LN2 / tau * float(inner @ w)


def _spacefrac_image(prob: DiffusionProblem):
    def image(zeta, s):
        lam = prob.boundary.laplace(s)
        with np.errstate(divide="ignore", invalid="ignore"):
            a = _sumudu_coefficient(zeta, prob.order)
            val = a * lam / (a - s * zeta / prob.kappa)
        # zeta -> 0: A diverges and the image tends to lambda(s)
        return np.where(zeta == 0, lam * np.ones_like(val), val)
    return image


def _spacefrac_crosses_pole(prob: DiffusionProblem, mu: float, tau: float, n: int) -> bool:
    """True when the denominator changes sign between ``zeta -> 0+`` and an abscissa."""
    if mu == 0:
        return False
    zeta = 1.0 / stehfest_abscissae(mu, n)
    s = stehfest_abscissae(tau, n)
    denom = _sumudu_coefficient(zeta[None, :], prob.order) - s[:, None] * zeta[None, :] / prob.kappa
    return bool((denom <= 0).any())


def _meta(prob: DiffusionProblem, inv: InversionConfig) -> dict:
    meta = {
        "model": prob.model,
        "kappa": prob.kappa,
        "boundary": prob.boundary.kind,
        "amplitude": prob.boundary.amplitude,
        "method": inv.method,
        "stehfest_order": inv.stehfest_order,
    }
    if prob.order is not None:
        meta.update(varpi=prob.order.varpi, norm=prob.order.norm)
    if inv.method == "talbot":
        meta.update(talbot_nodes=inv.talbot_nodes, talbot_scale=inv.talbot_scale)
    if prob.model == "space-fractional":
        meta["nested_order"] = inv.nested_order
    return meta


def _invert_grid(prob: DiffusionProblem, mu, tau, inv: InversionConfig,
                 image: Callable) -> SolutionGrid:
    mu, tau = _check_grid(mu, tau)
    values = np.empty((mu.size, tau.size))
    for i, m in enumerate(mu):
        for j, t in enumerate(tau):
            values[i, j] = laplace_invert(lambda s: image(m, s, prob), t, inv)
    return SolutionGrid(mu, tau, values, meta=_meta(prob, inv))


def solve_timefrac(prob: DiffusionProblem, mu: Sequence[float], tau: Sequence[float],
                   inv: InversionConfig = InversionConfig()) -> SolutionGrid:
    if prob.model != "time-fractional":
        raise ConfigError(f"expected a time-fractional problem, got {prob.model!r}")
    if inv.method != "stehfest":
        raise ConfigError("fractional images are only defined for Re(s) > 0; use stehfest")
    return _invert_grid(prob, mu, tau, inv, timefrac_laplace_solution)


def solve_classical(prob: DiffusionProblem, mu: Sequence[float], tau: Sequence[float],
                    inv: InversionConfig = InversionConfig()) -> SolutionGrid:
    if prob.model != "classical":
        raise ConfigError(f"expected a classical problem, got {prob.model!r}")
    return _invert_grid(prob, mu, tau, inv, _classical_image)


def solve_spacefrac(prob: DiffusionProblem, mu: Sequence[float], tau: Sequence[float],
                    inv: InversionConfig = InversionConfig()) -> SolutionGrid:
    """Nested Stehfest inversion of the space-fractional image.

    Grid points whose inner abscissae reach across the pole of the image are
    flagged and left as NaN instead of aborting the solve.
    """
    if prob.model != "space-fractional":
        raise ConfigError(f"expected a space-fractional problem, got {prob.model!r}")
    if inv.method != "stehfest":
        raise ConfigError("the double inversion is Stehfest-only")
    mu, tau = _check_grid(mu, tau)
    n = inv.nested_order
    image = _spacefrac_image(prob)
    values = np.full((mu.size, tau.size), np.nan)
    flags = np.zeros(values.shape, dtype=bool)
    for i, m in enumerate(mu):
        for j, t in enumerate(tau):
            if _spacefrac_crosses_pole(prob, m, t, n):
                flags[i, j] = True
                continue
            values[i, j] = double_invert(image, m, t, n)
    return SolutionGrid(mu, tau, values, flags, meta=_meta(prob, inv))


def solve(prob: DiffusionProblem, mu, tau, inv: InversionConfig = InversionConfig()) -> SolutionGrid:
    """Dispatch on ``prob.model``."""
    solver = {"time-fractional": solve_timefrac, "space-fractional": solve_spacefrac,
              "classical": solve_classical}[prob.model]
    return solver(prob, mu, tau, inv)


@dataclass
class Comparison:
    """Classical and fractional solutions on one grid.

    ``columns`` maps a label (``"classical"`` or ``"varpi=<v>"``) to an
    ``(n_mu, n_tau)`` array; ``differences`` holds each fractional column minus
    the classical one.
    """

    mu: np.ndarray
    tau: np.ndarray
    columns: dict[str, np.ndarray]
    differences: dict[str, np.ndarray]
    flags: np.ndarray
    meta: dict = field(default_factory=dict)


def compare_models(kappa: float, boundary: BoundarySpec, orders: Sequence[float],
                   mu, tau, inv: InversionConfig = InversionConfig(),
                   model: Model = "time-fractional", norm: float = 1.0) -> Comparison:
    """Solve the classical problem and the fractional ``model`` for each order."""
    if model == "classical":
        raise ConfigError("compare needs a fractional model")
    base = solve(DiffusionProblem(kappa, boundary, "classical"), mu, tau, inv)
    columns = {"classical": base.values}
    differences = {}
    flags = base.flags.copy()
    for v in orders:
        grid = solve(DiffusionProblem(kappa, boundary, model, FracOrder(v, norm)), mu, tau, inv)
        label = f"varpi={v:g}"
        columns[label] = grid.values
        differences[label] = grid.values - base.values
        flags |= grid.flags
    meta = {"kappa": kappa, "boundary": boundary.kind, "amplitude": boundary.amplitude,
            "model": model, "orders": list(orders), "norm": norm,
            "method": inv.method, "stehfest_order": inv.stehfest_order}
    return Comparison(base.mu, base.tau, columns, differences, flags, meta)
