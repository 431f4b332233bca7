"""
Laplace and Sumudu images
=========================

The operator is a convolution of ``f'`` with the kernel, so its Laplace image
is the product of the kernel image ``arctan(pi c/s)/(pi c)`` with
``s F(s) - f(0)``. Here that identity is checked by transforming the computed
derivative numerically.
"""

import math

from sincfrac import (CATALOGUE, FracOrder, frac_derivative, laplace_image_operator,
                      numerical_laplace, sumudu_image_operator)

order = FracOrder(0.5)

# %%
# Closed-form image against a numerical forward transform
# -------------------------------------------------------

for name in ("linear", "exp-decay", "sine"):
    entry = CATALOGUE[name]
    for s in (1.0, 2.0, 5.0):
        est = numerical_laplace(lambda m: frac_derivative(entry.spec, 0.0, m, order), s)
        exact = laplace_image_operator(entry.laplace(s), entry.value_at_zero, s, order)
        print(f"{name:10s} s={s}: numeric {est.value:+.10f} closed form {exact:+.10f}")

# %%
# Sumudu image through the duality
# --------------------------------
# ``G(zeta) = F(1/zeta)/zeta``. The displayed variant with an extra
# ``1/zeta`` is available as ``mode="as-paper"`` and differs by that factor.

entry = CATALOGUE["linear"]
zeta = 1 / math.pi
dual = sumudu_image_operator(entry.sumudu(zeta), 0.0, zeta, order)
literal = sumudu_image_operator(entry.sumudu(zeta), 0.0, zeta, order, mode="as-paper")
print(f"zeta=1/pi: dual {dual:.6f}, with extra 1/zeta {literal:.6f}")
