"""
Fractional derivative of a few simple functions
===============================================

For ``f(x) = x`` the derivative has the closed form ``Si(pi c mu)/pi``, which
makes it a convenient accuracy check for the panel quadrature.
"""

from pathlib import Path

import numpy as np

from sincfrac import (CATALOGUE, FracOrder, frac_derivative, limit_probe,
                      linear_case_closed_form)
from sincfrac.output import Series, emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

# %%
# Quadrature against the closed form
# ----------------------------------

linear = CATALOGUE["linear"].spec
mu = np.linspace(0.05, 6, 60)
series = []
for varpi in (0.25, 0.5, 0.75):
    order = FracOrder(varpi)
    numeric = np.array([frac_derivative(linear, 0.0, m, order) for m in mu])
    exact = np.array([linear_case_closed_form(m, order) for m in mu])
    print(f"varpi={varpi}: max |quadrature - closed form| = {np.max(np.abs(numeric - exact)):.1e}")
    series.append(Series(f"varpi={varpi}", mu, numeric))
emit_svg(series, OUT / "derivative_linear.svg", title="Derivative of f(x) = x",
         x_label="mu", y_label="D f")

# %%
# Behaviour at the ends of the order range
# ----------------------------------------
# The probe tabulates the operator as ``varpi`` moves toward 0 and 1 next to
# two natural reference values: the slope ``f'(mu)`` and the increment
# ``f(mu) - f(a)``. For small orders the kernel amplitude vanishes and so does
# the operator. Near one the kernel concentrates at ``x = mu`` with only half
# of its mass inside the interval, and the value approaches ``f'(mu)/2``.

probe = limit_probe(CATALOGUE["sine"].spec, 0.0, 1.0, [0.01, 0.1, 0.5, 0.9, 0.99, 0.998])
print(f"slope f'(1) = {probe.slope_at_mu:.6f}, increment f(1)-f(0) = {probe.increment:.6f}")
for varpi, value in probe.rows():
    print(f"  varpi={varpi:<6} D f(1) = {value:.6f}")
