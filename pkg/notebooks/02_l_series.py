# %% [markdown]
# # zeta(M, s) and its twisted partner
#
# zeta(M, s) sums chi(n) n^-s over odd n; the twisted series multiplies each
# coefficient by the Liouville function.  Their product is sum_{n odd} n^-2s.

# %%
import math

from conic_lseries.lseries import (
    functional_equation_check,
    odd_power_sum_direct,
    zeta_accelerated,
    zeta_hat_closed_form,
    zeta_partial,
)

# %% [markdown]
# Plain partial sums at s = 1 bracket pi/4 and converge like 1/N.
# Averaging the partial sums repeatedly gets machine precision from 64 terms.

# %%
for N in (10, 11, 1000, 1001):
    print(N, zeta_partial(1.0, N).value - math.pi / 4)
print("accelerated", zeta_accelerated(1.0).value - math.pi / 4)

# %%
print("zeta_hat(M,1) - pi/2 =", zeta_hat_closed_form(1.0).value - math.pi / 2)

# %%
for s in (1.0, 1.25, 1.5, 2.0):
    print(functional_equation_check(s).summary())
print("sum 1/n^2 over odd n - pi^2/8 =", odd_power_sum_direct(2.0).value - math.pi**2 / 8)
