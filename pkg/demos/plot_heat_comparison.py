"""
Classical and fractional heat diffusion
=======================================

A semi-infinite rod starts at zero temperature and its end is held at 1. The
classical profile is ``erfc(mu / (2 sqrt(kappa tau)))``. Replacing the time
derivative by the sinc-kernel operator changes the decay rate to ``sqrt(H)``
with ``H = s arctan(pi c / s) / (pi kappa)``.
"""

from pathlib import Path

import numpy as np

from sincfrac import (BoundarySpec, DiffusionProblem, FracOrder, classical_closed_form,
                      compare_models, solve_spacefrac)
from sincfrac.output import Series, emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

mu = np.linspace(0, 4, 41)
step = BoundarySpec("step", 1.0)

# %%
# Profiles at tau = 1
# -------------------

cmp = compare_models(1.0, step, [0.25, 0.5, 0.75, 0.99], mu, [1.0])
series = [Series(label, mu, values[:, 0]) for label, values in cmp.columns.items()]
emit_svg(series, OUT / "heat_profiles.svg", title="Temperature at tau = 1",
         x_label="mu", y_label="Pi")
err = np.max(np.abs(cmp.columns["classical"][:, 0]
                    - [classical_closed_form(m, 1.0, 1.0, 1.0) for m in mu]))
print(f"classical column vs erfc: max error {err:.1e}")

# %%
# Orders near one
# ---------------
# As ``varpi -> 1`` the arctangent tends to ``pi/2`` and ``H -> s/(2 kappa)``:
# the fractional model behaves like the classical one with twice the
# diffusivity. Near zero ``H`` vanishes and the boundary value is carried
# almost unattenuated.

doubled = np.array([classical_closed_form(m, 1.0, 2.0, 1.0) for m in mu])
print("varpi=0.99 vs classical with 2 kappa: max rel diff",
      f"{np.max(np.abs(cmp.columns['varpi=0.99'][5:21, 0] / doubled[5:21] - 1)):.1e}")

# %%
# Space-fractional model
# ----------------------
# This model is inverted twice with Stehfest, so rounding grows with the
# square of the weight sums and the default order per axis is 10. Points
# whose abscissae reach the pole of the image are flagged and left blank.

grid = solve_spacefrac(DiffusionProblem(1.0, step, "space-fractional", FracOrder(0.5)),
                       [0.0, 0.05, 0.1, 0.2], [0.5, 1.0, 2.0])
print("space-fractional, rows mu, columns tau:")
print(np.array2string(grid.values, precision=4))
print("flagged points:", int(grid.flags.sum()))
