"""Command-line front end.

Subcommands: ``kernel``, ``deriv``, ``image``, ``invert``, ``heat`` and
``compare``. Parameters come from built-in defaults, then an optional
``--config`` file of ``key = value`` lines, then command-line flags.
Exit codes: 0 success, 1 numeric failure (partial results flagged),
2 invalid configuration.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import heat, inversion, kernel, operator, transforms
from .errors import ConfigError, NumericError
from .functions import CATALOGUE
from .output import Series, emit_csv, emit_svg

COMMANDS = ("kernel", "deriv", "image", "invert", "heat", "compare")
FORMATS = ("csv", "svg", "both")

INVERT_IMAGES: dict[str, tuple[Callable, Callable]] = {
    "one-over-s": (lambda s: 1.0 / s, lambda t: 1.0),
    "one-over-s2": (lambda s: 1.0 / s**2, lambda t: t),
    "exp-decay": (lambda s: 1.0 / (s + 1.0), lambda t: math.exp(-t)),
    "sine": (lambda s: 1.0 / (s**2 + 1.0), math.sin),
}


def parse_grid(text: str) -> list[float]:
    """``start:stop:step`` (stop included) or a comma list of numbers."""
    text = str(text).strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("grid range must be start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if not step > 0 or stop < start:
            raise ValueError("grid range needs step > 0 and stop >= start")
        n = math.floor((stop - start) / step + 1e-9) + 1
        return np.linspace(start, start + (n - 1) * step, n).tolist()
    return [float(p) for p in text.split(",") if p.strip()]


def _int(text) -> int:
    return int(str(text))


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    low = str(text).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected a boolean")


@dataclass(frozen=True)
class Param:
    parse: Callable
    default: object
    help: str
    choices: tuple | None = None


PARAMS: dict[str, Param] = {
    "varpi": Param(float, 0.5, "fractional order in (0,1)"),
    "varpis": Param(parse_grid, "0.25,0.5,0.75,0.99", "comma list of orders in (0,1)"),
    "norm": Param(float, 1.0, "normalization value, > 0"),
    "x": Param(parse_grid, "-5:5:0.05", "kernel abscissae"),
    "fn": Param(str, "linear", "operand function", tuple(CATALOGUE)),
    "a": Param(float, 0.0, "lower terminal"),
    "mu": Param(parse_grid, "1", "mu grid"),
    "n": Param(_int, 0, "integer order added to varpi, >= 0"),
    "rel_tol": Param(float, 1e-10, "relative quadrature tolerance, > 0"),
    "abs_tol": Param(float, 1e-12, "absolute quadrature tolerance, > 0"),
    "max_panels": Param(_int, 5000, "quadrature panel budget, >= 1"),
    "panel_strategy": Param(str, "kernel-zeros", "panel layout", ("kernel-zeros", "uniform")),
    "transform": Param(str, "laplace", "transform", ("fourier", "laplace", "sumudu")),
    "target": Param(str, "kernel", "image of the kernel or of the operator", ("kernel", "operator")),
    "at": Param(parse_grid, "0.5:5:0.5", "transform variable grid"),
    "fourier_mode": Param(str, "as-paper", "Fourier cutoff", ("as-paper", "band-limited")),
    "sumudu_mode": Param(str, "dual", "Sumudu operator image", ("dual", "as-paper")),
    "image": Param(str, "one-over-s", "Laplace image to invert", tuple(INVERT_IMAGES)),
    "t": Param(parse_grid, "1", "inversion times, > 0"),
    "method": Param(str, "stehfest", "inversion method", ("stehfest", "talbot")),
    "stehfest_n": Param(_int, 14, "Stehfest order, even in [2,20]"),
    "nested_n": Param(_int, 10, "Stehfest order per axis for double inversion, even in [2,20]"),
    "talbot_nodes": Param(_int, 32, "Talbot nodes, >= 8"),
    "talbot_scale": Param(float, 0.4, "Talbot contour scale, > 0"),
    "model": Param(str, "time-fractional", "diffusion model", heat.MODELS),
    "boundary": Param(str, "step:1", "boundary data step:<amplitude> or ramp:<slope>"),
    "kappa": Param(float, 1.0, "thermal diffusivity, > 0"),
    "tau": Param(parse_grid, "1", "tau grid, > 0"),
    "out": Param(str, None, "output path"),
    "format": Param(str, "csv", "output format", FORMATS),
    "quiet": Param(_bool, False, "suppress progress messages"),
}

_INVERSION_KEYS = ("method", "stehfest_n", "talbot_nodes", "talbot_scale")
COMMAND_KEYS: dict[str, tuple[str, ...]] = {
    "kernel": ("varpi", "norm", "x"),
    "deriv": ("fn", "a", "mu", "varpi", "norm", "n", "rel_tol", "abs_tol", "max_panels",
              "panel_strategy"),
    "image": ("transform", "target", "fn", "varpi", "norm", "at", "fourier_mode", "sumudu_mode"),
    "invert": ("image", "t") + _INVERSION_KEYS,
    "heat": ("model", "boundary", "kappa", "varpi", "norm", "mu", "tau", "nested_n")
            + _INVERSION_KEYS,
    "compare": ("model", "boundary", "kappa", "varpis", "norm", "mu", "tau", "nested_n",
                "stehfest_n"),
}
COMMAND_DEFAULTS = {
    "heat": {"mu": "0:4:0.1"},
    "compare": {"mu": "0:4:0.1"},
}
GLOBAL_KEYS = ("out", "format", "quiet")


@dataclass
class ScenarioConfig:
    command: str
    params: dict = field(default_factory=dict)
    out: str | None = None
    format: str = "csv"
    quiet: bool = False


def _flag(key: str) -> str:
    return "--" + ("varpi" if key == "varpis" else key.replace("_", "-"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="key = value file")
    common.add_argument("--out", default=argparse.SUPPRESS, help=PARAMS["out"].help)
    common.add_argument("--format", default=argparse.SUPPRESS, help="csv | svg | both")
    common.add_argument("--quiet", action="store_const", const=True, default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="sincfrac", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for command, keys in COMMAND_KEYS.items():
        p = sub.add_parser(command, parents=[common])
        for key in keys:
            p.add_argument(_flag(key), dest=key, default=argparse.SUPPRESS, help=PARAMS[key].help)
    return parser


def read_config_file(path: str | Path) -> dict[str, str]:
    values = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key.lstrip("-").replace("-", "_")] = value
    return values


def _bad(key: str, value, allowed: str) -> ConfigError:
    return ConfigError(f"{key}: got {value!r}, {allowed}")


def _convert(key: str, raw):
    spec = PARAMS[key]
    if raw is None:
        return None
    try:
        value = raw if isinstance(raw, list) else spec.parse(raw)
    except (TypeError, ValueError) as exc:
        raise _bad(key, raw, f"expected {spec.help} ({exc})") from None
    if spec.choices is not None and value not in spec.choices:
        raise _bad(key, raw, "allowed values: " + ", ".join(spec.choices))
    return value


def _in_unit_interval(key: str, v: float) -> None:
    if not (math.isfinite(v) and 0.0 < v < 1.0):
        raise _bad(key, v, "varpi must lie in open interval (0,1)")


def _validate(cfg: ScenarioConfig) -> None:
    p = cfg.params
    cmd = cfg.command

    def positive(key):
        if key in p and not (math.isfinite(p[key]) and p[key] > 0):
            raise _bad(key, p[key], "must be finite and > 0")

    def grid(key, lower=None, strict=False, increasing=False):
        values = p[key]
        if not values:
            raise _bad(key, values, "grid must not be empty")
        if not all(math.isfinite(v) for v in values):
            raise _bad(key, values, "grid points must be finite")
        if lower is not None and any(v < lower or (strict and v == lower) for v in values):
            raise _bad(key, values, f"grid points must be {'>' if strict else '>='} {lower}")
        if increasing and any(b <= a for a, b in zip(values, values[1:])):
            raise _bad(key, values, "grid points must be strictly increasing")

    if "varpi" in p:
        _in_unit_interval("varpi", p["varpi"])
    if "varpis" in p:
        grid("varpis")
        for v in p["varpis"]:
            _in_unit_interval("varpi", v)
    for key in ("norm", "kappa", "rel_tol", "abs_tol", "talbot_scale"):
        positive(key)
    if "max_panels" in p and p["max_panels"] < 1:
        raise _bad("max_panels", p["max_panels"], "must be >= 1")
    if "n" in p and p["n"] < 0:
        raise _bad("n", p["n"], "must be >= 0")
    for key in ("stehfest_n", "nested_n"):
        if key in p and (p[key] % 2 or not 2 <= p[key] <= 20):
            raise _bad(key, p[key], "must be an even integer in [2, 20]")
    if "talbot_nodes" in p and p["talbot_nodes"] < 8:
        raise _bad("talbot_nodes", p["talbot_nodes"], "must be >= 8")

    if cmd == "kernel":
        grid("x")
    elif cmd == "deriv":
        if not math.isfinite(p["a"]):
            raise _bad("a", p["a"], "must be finite")
        grid("mu", lower=p["a"])
    elif cmd == "image":
        if p["transform"] == "fourier":
            grid("at")
            if p["target"] == "operator" and CATALOGUE[p["fn"]].fourier is None:
                raise _bad("fn", p["fn"], "the Fourier operator image needs fn=gaussian")
        else:
            grid("at", lower=0.0, strict=True)
    elif cmd == "invert":
        grid("t", lower=0.0, strict=True)
    elif cmd in ("heat", "compare"):
        grid("mu", lower=0.0, increasing=True)
        grid("tau", lower=0.0, strict=True, increasing=True)
        _parse_boundary(p["boundary"])
        if cmd == "compare" and p["model"] == "classical":
            raise _bad("model", "classical", "compare needs time-fractional or space-fractional")
        if p.get("method", "stehfest") == "talbot" and p["model"] != "classical":
            raise _bad("method", "talbot", "fractional models need stehfest (images need Re(s) > 0)")

    if cfg.format in ("svg", "both"):
        if cfg.out is None:
            raise _bad("out", None, "svg output needs --out")
        axis = {"kernel": "x", "deriv": "mu", "image": "at", "invert": "t",
                "heat": "mu", "compare": "mu"}[cmd]
        if len(p[axis]) < 2:
            raise _bad(axis, p[axis], "svg output needs at least two points on the plotted axis")


def _parse_boundary(text: str) -> tuple[str, float]:
    kind, _, amp = str(text).partition(":")
    if kind not in ("step", "ramp"):
        raise _bad("boundary", text, "expected step:<amplitude> or ramp:<slope>")
    try:
        value = float(amp) if amp else 1.0
    except ValueError:
        raise _bad("boundary", text, "amplitude must be a number") from None
    if not math.isfinite(value):
        raise _bad("boundary", text, "amplitude must be finite")
    return kind, value


def parse_config(argv: list[str] | None = None) -> ScenarioConfig:
    """Build a validated :class:`ScenarioConfig`; flags override file values."""
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    allowed = set(COMMAND_KEYS[command]) | set(GLOBAL_KEYS)
    merged: dict[str, object] = {}
    if "config" in ns:
        for key, value in read_config_file(ns.pop("config")).items():
            if key == "varpi" and "varpis" in allowed:
                key = "varpis"
            if key not in allowed:
                raise ConfigError(f"{key}: unknown key for command {command!r}")
            merged[key] = value
    merged.update(ns)
    raw = {key: PARAMS[key].default for key in allowed}
    raw.update(COMMAND_DEFAULTS.get(command, {}))
    raw.update(merged)
    values = {key: _convert(key, value) for key, value in raw.items()}
    cfg = ScenarioConfig(
        command,
        {k: v for k, v in values.items() if k not in GLOBAL_KEYS},
        out=values["out"],
        format=values["format"],
        quiet=values["quiet"],
    )
    _validate(cfg)
    return cfg


# --- execution -------------------------------------------------------------


@dataclass
class _Result:
    columns: dict[str, list]
    series: list[Series]
    flags: list[str] | None = None
    failed: bool = False
    x_label: str = ""
    y_label: str = ""


def _order(p) -> kernel.FracOrder:
    return kernel.FracOrder(p["varpi"], p["norm"])


def _inversion(p) -> inversion.InversionConfig:
    return inversion.InversionConfig(
        method=p.get("method", "stehfest"),
        stehfest_order=p.get("stehfest_n", 14),
        talbot_nodes=p.get("talbot_nodes", 32),
        talbot_scale=p.get("talbot_scale", 0.4),
        nested_order=p.get("nested_n", 10),
    )


def _run_kernel(p) -> _Result:
    order = _order(p)
    x = np.asarray(p["x"])
    s = np.asarray(kernel.nsinc(x))
    k = np.asarray(kernel.scaled_kernel(order, x))
    return _Result({"x [1]": x, "nsinc [1]": s, "kernel [1]": k},
                   [Series("nsinc(x)", x, s), Series(f"kernel, varpi={order.varpi:g}", x, k)],
                   x_label="x", y_label="value")


def _run_deriv(p) -> _Result:
    order = _order(p)
    spec = CATALOGUE[p["fn"]].spec
    quad = operator.QuadratureConfig(p["rel_tol"], p["abs_tol"], p["max_panels"],
                                     p["panel_strategy"])
    values, flags = [], []
    for mu in p["mu"]:
        try:
            values.append(operator.frac_derivative_higher(spec, p["a"], mu, p["n"], order, quad))
            flags.append("ok")
        except NumericError:
            values.append(math.nan)
            flags.append("numeric")
    columns = {"mu [length]": p["mu"], "derivative [1]": values}
    if p["fn"] == "linear" and p["n"] == 0 and p["a"] == 0:
        columns["closed_form [1]"] = [operator.linear_case_closed_form(m, order) for m in p["mu"]]
    failed = "numeric" in flags
    return _Result(columns, [Series(f"{p['fn']}, order {p['n'] + order.varpi:g}", p["mu"], values)],
                   flags if failed else None, failed, "mu", "derivative")


def _run_image(p) -> _Result:
    order = _order(p)
    entry = CATALOGUE[p["fn"]]
    at = p["at"]
    tr, target = p["transform"], p["target"]
    if tr == "fourier":
        if target == "kernel":
            vals = [complex(transforms.fourier_image_kernel(order, xi, p["fourier_mode"])) for xi in at]
        else:
            vals = [transforms.fourier_image_operator(entry.fourier, xi, order, p["fourier_mode"])
                    for xi in at]
    elif tr == "laplace":
        if target == "kernel":
            vals = [complex(transforms.laplace_image_kernel(order, s)) for s in at]
        else:
            vals = [complex(transforms.laplace_image_operator(entry.laplace(s), entry.value_at_zero,
                                                              s, order)) for s in at]
    else:
        if target == "kernel":
            vals = [complex(transforms.sumudu_image_kernel(order, z)) for z in at]
        else:
            vals = [complex(transforms.sumudu_image_operator(entry.sumudu(z), entry.value_at_zero, z,
                                                             order, p["sumudu_mode"])) for z in at]
    var = {"fourier": "xi", "laplace": "s", "sumudu": "zeta"}[tr]
    re = [v.real for v in vals]
    im = [v.imag for v in vals]
    series = [Series(f"Re {tr} {target}", at, re)]
    if any(im):
        series.append(Series(f"Im {tr} {target}", at, im))
    return _Result({f"{var} [1]": at, "real [1]": re, "imag [1]": im}, series,
                   x_label=var, y_label="image")


def _run_invert(p) -> _Result:
    image, exact = INVERT_IMAGES[p["image"]]
    cfg = _inversion(p)
    values = [inversion.laplace_invert(image, t, cfg) for t in p["t"]]
    ref = [exact(t) for t in p["t"]]
    return _Result({"t [time]": p["t"], "inverse [1]": values, "exact [1]": ref,
                    "abs_error [1]": [abs(a - b) for a, b in zip(values, ref)]},
                   [Series("inverse", p["t"], values), Series("exact", p["t"], ref)],
                   x_label="t", y_label="value")


def _boundary(p) -> heat.BoundarySpec:
    kind, amp = _parse_boundary(p["boundary"])
    return heat.BoundarySpec(kind, amp)


def _grid_columns(mu, tau) -> tuple[list, list]:
    mm, tt = np.meshgrid(mu, tau, indexing="ij")
    return mm.ravel().tolist(), tt.ravel().tolist()


def _run_heat(p) -> _Result:
    order = None if p["model"] == "classical" else _order(p)
    prob = heat.DiffusionProblem(p["kappa"], _boundary(p), p["model"], order)
    grid = heat.solve(prob, p["mu"], p["tau"], _inversion(p))
    mu_col, tau_col = _grid_columns(grid.mu, grid.tau)
    flags = ["singularity" if f else "ok" for f in grid.flags.ravel()]
    series = [Series(f"tau={t:g}", grid.mu, grid.values[:, j]) for j, t in enumerate(grid.tau)]
    return _Result({"mu [length]": mu_col, "tau [time]": tau_col,
                    "Pi [boundary units]": grid.values.ravel().tolist()},
                   series, flags, grid.any_flagged, "mu", "Pi")


def _run_compare(p) -> _Result:
    cmp = heat.compare_models(p["kappa"], _boundary(p), p["varpis"], p["mu"], p["tau"],
                              _inversion(p), p["model"], p["norm"])
    mu_col, tau_col = _grid_columns(cmp.mu, cmp.tau)
    columns = {"mu [length]": mu_col, "tau [time]": tau_col}
    for label, values in cmp.columns.items():
        columns[f"{label} [boundary units]"] = values.ravel().tolist()
    for label, values in cmp.differences.items():
        columns[f"diff_{label} [boundary units]"] = values.ravel().tolist()
    series = [Series(f"{label}, tau={t:g}", cmp.mu, values[:, j])
              for label, values in cmp.columns.items() for j, t in enumerate(cmp.tau)]
    flags = ["singularity" if f else "ok" for f in cmp.flags.ravel()]
    return _Result(columns, series, flags, bool(cmp.flags.any()), "mu", "Pi")


_RUNNERS = {"kernel": _run_kernel, "deriv": _run_deriv, "image": _run_image,
            "invert": _run_invert, "heat": _run_heat, "compare": _run_compare}


def _config_record(cfg: ScenarioConfig) -> dict:
    return {"command": cfg.command, **cfg.params}


def run_scenario(cfg: ScenarioConfig) -> int:
    """Execute ``cfg`` and write its artifacts; returns the exit code."""
    try:
        result = _RUNNERS[cfg.command](cfg.params)
    except ConfigError as exc:
        print(f"sincfrac: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"sincfrac: numeric failure: {exc}", file=sys.stderr)
        return 1
    record = _config_record(cfg)
    try:
        if cfg.format in ("csv", "both"):
            if cfg.out is None:
                emit_csv(result.columns, sys.stdout, record, result.flags)
            else:
                target = Path(cfg.out)
                if cfg.format == "both":
                    target = target.with_suffix(".csv")
                emit_csv(result.columns, target, record, result.flags)
        if cfg.format in ("svg", "both"):
            target = Path(cfg.out)
            if cfg.format == "both":
                target = target.with_suffix(".svg")
            emit_svg(result.series, target, title=f"sincfrac {cfg.command}",
                     x_label=result.x_label, y_label=result.y_label)
    except OSError as exc:
        print(f"sincfrac: cannot write output: {exc}", file=sys.stderr)
        return 1
    if result.failed:
        if not cfg.quiet:
            print("sincfrac: some points failed and are flagged in the output", file=sys.stderr)
        return 1
    if not cfg.quiet and cfg.out is not None:
        print(f"sincfrac: wrote {cfg.out} ({cfg.format})", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"sincfrac: {exc}", file=sys.stderr)
        return 2
    return run_scenario(cfg)


if __name__ == "__main__":
    sys.exit(main())
