"""
Gaver-Stehfest inversion and its limits
=======================================

Every time-domain value in the heat models comes from inverting a Laplace
image at real abscissae ``k ln2 / t``. The weights grow to about ``1e8`` at
order 14, which fixes both the truncation error and the rounding floor.
"""

import math
from pathlib import Path

import numpy as np

from sincfrac import InversionConfig, laplace_invert, stehfest_weights
from sincfrac.output import Series, emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

# %%
# Weight identities
# -----------------
# With exact rational weights both sums hold exactly; in floating point they
# would not, because the terms cancel across eight orders of magnitude.

w = stehfest_weights(14)
print("sum V_k =", sum(w), " sum V_k/k =", sum(v / k for k, v in enumerate(w, 1)))
print("largest |V_k| =", float(max(abs(v) for v in w)))

# %%
# Error against the order
# -----------------------
# Truncation error falls with the order until rounding, about
# ``eps * sum|V_k|``, takes over.

orders = np.arange(6, 21, 2)
t = 2.0
errors = [abs(laplace_invert(lambda s: 1 / (s + 1), t, InversionConfig(stehfest_order=int(n)))
              - math.exp(-t)) for n in orders]
for n, e in zip(orders, errors):
    print(f"N={n:2d}: |error| for exp(-t) at t=2 is {e:.2e}")
emit_svg([Series("exp(-t), t=2", orders, np.log10(errors))], OUT / "stehfest_error.svg",
         title="Stehfest error", x_label="order N", y_label="log10 |error|")
