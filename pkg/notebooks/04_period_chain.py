# %% [markdown]
# # From the quarter period to zeta_hat(M, 1)
#
# The real quarter period integral_0^1 dx / sqrt(1 - x^2) is rewritten as a
# binomial series, a Wallis-weighted log integral, a log-kernel integral and
# finally a ratio of L-values.  Every finite leg is computed independently.

# %%
import math

from conic_lseries.analysis import (
    log_kernel_integral,
    period_chain_check,
    series_S,
    series_S_extrapolated,
    wallis,
)

# %% [markdown]
# Wallis: integral of cos^(2k) over [0, pi/2] from the recurrence.

# %%
print([round(wallis(2 * k) / (math.pi / 2), 6) for k in range(6)])

# %% [markdown]
# The binomial series crawls (tail ~ N^-1/2); Richardson extrapolation in
# the tail exponents 1/2, 3/2, 5/2 recovers pi/2.

# %%
for N in (10**2, 10**4, 10**6):
    print(N, series_S(N).value - math.pi / 2)
print("extrapolated", series_S_extrapolated().value - math.pi / 2)

# %%
print([log_kernel_integral(k).value * (2 * k + 1) ** 2 for k in range(4)])

# %%
for check in period_chain_check():
    print(check.summary())
