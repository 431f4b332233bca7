"""
The sinc kernel and its order parameter
=======================================

The operator is built on the normalized sinc ``nsinc(x) = sin(pi x)/(pi x)``
stretched by the rate ``c = varpi/(1 - varpi)``. Small orders give a wide,
flat kernel and orders near one give a narrow spike.
"""

from pathlib import Path

import numpy as np

from sincfrac import FracOrder, mollifier_integral, scaled_kernel
from sincfrac.output import Series, emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

# %%
# Kernel shape across orders
# --------------------------
# The amplitude is ``c`` times the normalization, so the area under the
# kernel stays at the normalization value while the width shrinks as ``1/c``.

x = np.linspace(-4, 4, 801)
series = []
for varpi in (0.25, 0.5, 0.75):
    order = FracOrder(varpi)
    series.append(Series(f"varpi={varpi}", x, scaled_kernel(order, x)))
    print(f"varpi={varpi}: rate c={order.rate:.3f}, peak={order.amplitude:.3f}")
emit_svg(series, OUT / "kernel.svg", title="Scaled sinc kernel", x_label="x", y_label="kernel")

# %%
# The kernel as a mollifier
# -------------------------
# Integrated against a smooth function, ``nsinc(x/varpi)/varpi`` recovers the
# function's value at zero as ``varpi`` shrinks. For ``exp(-x^2)`` the error
# is ``erfc(pi/(2 varpi))``, which drops below double precision quickly.

gaussian = lambda t: np.exp(-np.asarray(t) ** 2)
for varpi in (1.0, 0.5, 0.25):
    err = mollifier_integral(gaussian, varpi, window=10.0) - 1.0
    print(f"varpi={varpi}: mollifier error {err:+.3e}")
