# %% [markdown]
# # Points on x^2 + y^2 = z^2 over finite fields
#
# Count the affine points of x^2 + y^2 = 1 and the points at infinity over
# F_q by brute force, then compare against the closed forms.

# %%
from conic_lseries import FiniteField, count_total
from conic_lseries.counting import count_affine_bruteforce, count_affine_pairs

# %%
for q in (3, 4, 5, 7, 8, 9, 25, 27, 49):
    pc = count_total(q)
    print(f"q={q:>3}  affine={pc.affine:>3}  infinity={pc.infinity}  total={pc.total:>3}  a={pc.affine_error:+d}")

# %% [markdown]
# Two independent brute forces agree (squares histogram vs. all pairs).
# Note F_5: four affine points, so the sign exponent must be (q-1)/2.

# %%
F5 = FiniteField.of_order(5)
print(count_affine_bruteforce(F5), count_affine_pairs(F5))

# %% [markdown]
# The error term q - #affine is +1 for q = 1 mod 4 and -1 for q = 3 mod 4.

# %%
from conic_lseries.counting import scan_primes

rows = list(scan_primes(60))
print([(pc.p, pc.affine_error) for pc in rows])
