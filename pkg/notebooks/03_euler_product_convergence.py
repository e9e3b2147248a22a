# %% [markdown]
# # How fast does the Euler product reach pi/2?
#
# The product over odd primes of 1/(1 + a_p/p) converges conditionally.
# This is the curve behind the calibrated tolerance (fixture
# tests/fixtures/euler_product_curve.json).

# %%
import math

from conic_lseries.lseries import euler_product_curve

bounds = [10**k for k in range(2, 8)]
for series, target in (("zeta", math.pi / 4), ("zeta_hat", math.pi / 2)):
    print(series)
    for bound, value in euler_product_curve(series, 1.0, bounds):
        print(f"  P={bound:>9}  error={value - target:+.3e}")

# %% [markdown]
# The error shrinks roughly like 1/sqrt(P) with prime-race noise on top,
# so the 10^7 value (about 2.8e-5 off) sets a floor of 1e-4.
