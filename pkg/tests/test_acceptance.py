"""Acceptance gate: one test per criterion, at the stated tolerance."""

import math
import subprocess
import sys
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from sincfrac import (CATALOGUE, BoundarySpec, DiffusionProblem, FracOrder, SingularityError,
                      classical_closed_form, frac_derivative, laplace_image_kernel,
                      laplace_image_operator, laplace_invert, mollifier_integral, nsinc,
                      numerical_laplace, sine_integral, solve_classical, solve_timefrac,
                      spacefrac_sumudu_solution, stehfest_weights, sumudu_image_operator)
from sincfrac.heat import _sumudu_coefficient, double_invert
from sincfrac.inversion import InversionConfig

criterion = pytest.mark.criterion


@criterion(1, "linear-operand closed form, rel 1e-8, < 5 s")
def test_closed_form(detail):
    start = time.perf_counter()
    worst = 0.0
    for varpi in (0.1, 0.3, 0.5, 0.7, 0.9):
        order = FracOrder(varpi)
        for mu in (0.5, 1.0, 2.0):
            got = frac_derivative(CATALOGUE["linear"].spec, 0.0, mu, order)
            ref = order.norm * sine_integral(math.pi * varpi * mu / (1 - varpi)) / math.pi
            worst = max(worst, abs(got - ref) / abs(ref))
    elapsed = time.perf_counter() - start
    detail(f"max rel err {worst:.2e}, {elapsed:.2f} s")
    assert worst <= 1e-8
    assert elapsed < 5


@criterion(2, "Laplace convolution identity, rel 1e-6, < 60 s")
def test_convolution_identity(detail):
    start = time.perf_counter()
    worst = 0.0
    for name in ("linear", "exp-decay", "sine"):
        entry = CATALOGUE[name]
        for varpi in (0.25, 0.5, 0.75):
            order = FracOrder(varpi)
            for s in (1.0, 2.0, 5.0):
                est = numerical_laplace(lambda mu: frac_derivative(entry.spec, 0.0, mu, order), s,
                                        rel_tol=1e-10)
                ref = laplace_image_operator(entry.laplace(s), entry.value_at_zero, s, order)
                worst = max(worst, abs(est.value - ref) / abs(ref))
    elapsed = time.perf_counter() - start
    detail(f"max rel err {worst:.2e}, {elapsed:.1f} s")
    assert worst <= 1e-6
    assert elapsed < 60


@criterion(3, "kernel Laplace image, rel 1e-6")
def test_kernel_image(detail):
    worst = 0.0
    for c in (1 / 3, 1.0, 3.0):
        order = FracOrder(c / (1 + c))
        for s in (1.0, 2.0, 5.0):
            est = numerical_laplace(lambda t: nsinc(-c * t), s)
            ref = laplace_image_kernel(order, s)
            worst = max(worst, abs(est.value - ref) / abs(ref))
    detail(f"max rel err {worst:.2e}")
    assert worst <= 1e-6


@criterion(4, "Stehfest exactness and accuracy, N = 14")
def test_stehfest(detail):
    failures = []
    cfg = InversionConfig(stehfest_order=14)
    for t in (0.1, 1.0, 10.0):
        checks = [("1/s", lambda s: 1 / s, 1.0, 1e-9),
                  ("1/s^2", lambda s: 1 / s**2, t, 1e-5),
                  ("1/(s+1)", lambda s: 1 / (s + 1), math.exp(-t), 1e-5)]
        for label, image, exact, tol in checks:
            err = abs(laplace_invert(image, t, cfg) - exact)
            if err > tol:
                failures.append(f"{label} t={t:g} err {err:.1e}")
    for n in (8, 10, 12, 14, 16):
        w = stehfest_weights(n)
        s0 = abs(float(sum(w)))
        s1 = abs(float(sum(v / k for k, v in enumerate(w, start=1))) - 1)
        if s0 > 1e-9 or s1 > 1e-9:
            failures.append(f"weights N={n}")
    detail("all sub-checks met" if not failures else "missed: " + ", ".join(failures))
    assert not failures


@criterion(5, "classical pipeline vs erfc, abs 1e-4, < 10 s")
def test_classical_pipeline(detail):
    start = time.perf_counter()
    mu = np.linspace(0, 4, 41)
    tau = [0.25, 1.0, 4.0]
    worst = 0.0
    for kappa in (0.5, 1.0):
        grid = solve_classical(DiffusionProblem(kappa, BoundarySpec("step", 1.0), "classical"), mu, tau)
        ref = np.array([[classical_closed_form(m, t, kappa, 1.0) for t in tau] for m in mu])
        worst = max(worst, float(np.max(np.abs(grid.values - ref))))
    elapsed = time.perf_counter() - start
    detail(f"max abs err {worst:.2e}, {elapsed:.2f} s")
    assert worst <= 1e-4
    assert elapsed < 10


@criterion(6, "time-fractional boundary recovery, step 1e-6, ramp 1e-5")
def test_boundary_recovery(detail):
    tau = [0.1, 1.0, 10.0]
    step_err = ramp_err = 0.0
    for varpi in (0.25, 0.5, 0.75):
        order = FracOrder(varpi)
        step = solve_timefrac(DiffusionProblem(1.0, BoundarySpec("step", 1.0), "time-fractional", order),
                              [0.0], tau)
        ramp = solve_timefrac(DiffusionProblem(1.0, BoundarySpec("ramp", 1.0), "time-fractional", order),
                              [0.0], tau)
        step_err = max(step_err, float(np.max(np.abs(step.values[0] - 1.0))))
        ramp_err = max(ramp_err, float(np.max(np.abs(ramp.values[0] - np.asarray(tau)))))
    detail(f"step {step_err:.1e}, ramp {ramp_err:.1e}")
    assert step_err <= 1e-6
    assert ramp_err <= 1e-5


@criterion(7, "effective diffusivity at varpi = 0.99, rel 2%")
def test_effective_diffusivity(detail):
    mu = np.linspace(0.5, 2.0, 16)
    order = FracOrder(0.99)
    grid = solve_timefrac(DiffusionProblem(1.0, BoundarySpec("step", 1.0), "time-fractional", order),
                          mu, [1.0])
    ref = np.array([classical_closed_form(m, 1.0, 2.0, 1.0) for m in mu])
    worst = float(np.max(np.abs(grid.values[:, 0] / ref - 1)))
    detail(f"max rel diff {worst:.2e}")
    assert worst <= 0.02


@criterion(8, "space-fractional manufactured image 1e-4, balance residual 1e-12")
def test_spacefrac_oracle(detail):
    worst = 0.0
    for mu in (0.1, 0.5, 1.0, 2.0, 4.0):
        for tau in (0.25, 1.0, 4.0):
            got = double_invert(lambda z, s: np.broadcast_to(1.0 / s, np.broadcast(z, s).shape),
                                mu, tau, 10)
            worst = max(worst, abs(got - 1.0))
    rng = np.random.default_rng(2024)
    prob = DiffusionProblem(1.0, BoundarySpec("step", 1.0), "space-fractional", FracOrder(0.5))
    resid = 0.0
    checked = 0
    while checked < 100:
        zeta, s = rng.uniform(0.01, 10), rng.uniform(0.01, 10)
        try:
            val = spacefrac_sumudu_solution(zeta, s, prob)
        except SingularityError:
            continue
        a = float(_sumudu_coefficient(zeta, prob.order))
        lhs, rhs = a * (val - prob.boundary.laplace(s)), s * zeta / prob.kappa * val
        resid = max(resid, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
        checked += 1
    detail(f"inversion err {worst:.1e}, residual {resid:.1e}")
    assert worst <= 1e-4
    assert resid <= 1e-12


@criterion(9, "mollifier convergence for a Gaussian")
def test_mollifier(detail):
    # analytic errors are erfc(pi / (2 varpi)): 8.9e-6, 6.4e-19, 1.2e-70; the
    # last two sit below double precision, so only rounding separates them
    phi = lambda x: np.exp(-np.asarray(x) ** 2)
    errs = [abs(mollifier_integral(phi, v, window=10.0) - 1) for v in (0.5, 0.25, 0.125)]
    detail("errors " + ", ".join(f"{e:.1e}" for e in errs))
    assert errs[1] <= 1e-6
    assert errs[0] > errs[1] > errs[2]


@criterion(10, "Sumudu and Laplace operator images agree under zeta = 1/s, 1e-9")
def test_duality(detail):
    rng = np.random.default_rng(10)
    names = sorted(CATALOGUE)
    worst = 0.0
    for _ in range(50):
        entry = CATALOGUE[names[rng.integers(len(names))]]
        order = FracOrder(rng.uniform(0.05, 0.95), rng.uniform(0.5, 2.0))
        s = rng.uniform(0.2, 10.0)
        zeta = 1 / s
        lap = laplace_image_operator(entry.laplace(s), entry.value_at_zero, s, order)
        sum_ = sumudu_image_operator(entry.sumudu(zeta), entry.value_at_zero, zeta, order)
        worst = max(worst, abs(sum_ - s * lap) / max(1.0, abs(sum_)))
    detail(f"max diff {worst:.1e}")
    assert worst <= 1e-9


@criterion(11, "CLI determinism, exit codes, SVG well-formed")
def test_cli_contract(detail, tmp_path):
    def run(*args):
        return subprocess.run([sys.executable, "-m", "sincfrac", *args], capture_output=True,
                              check=False)

    heat = ["heat", "--model", "time-fractional", "--varpi", "0.5", "--mu", "0:2:0.25",
            "--tau", "0.5,1,2"]
    first, second = run(*heat), run(*heat)
    identical = first.returncode == 0 and first.stdout == second.stdout and first.stdout
    codes = (run("invert", "--image", "one-over-s", "--t", "1").returncode,
             run("heat", "--model", "space-fractional", "--varpi", "0.3", "--mu", "0,2",
                 "--tau", "0.2").returncode,
             run("deriv", "--varpi", "1.0").returncode)
    svg = tmp_path / "cmp.svg"
    made = run("compare", "--mu", "0:3:0.25", "--tau", "1", "--format", "svg", "--out", str(svg))
    root = ET.parse(svg).getroot() if made.returncode == 0 else None
    detail(f"identical={bool(identical)}, codes={codes}, svg={'ok' if root is not None else 'missing'}")
    assert identical
    assert codes == (0, 1, 2)
    assert root is not None and root.tag.endswith("svg")
