"""Run-wide numeric defaults.

Every default lives here so that a run is fully described by its arguments;
nothing is read from the environment.
"""

#: Largest field size for which brute-force enumeration is allowed.
ENUMERATION_BOUND = 2**20

#: Pair enumeration (the slow secondary oracle) is only used up to this q.
PAIR_ENUMERATION_BOUND = 2**10

#: Default smallest-prime-factor sieve size.
SIEVE_LIMIT = 10**7

#: Tolerance for identities whose both sides are closed-form or accelerated.
CLOSED_FORM_TOL = 1e-10

#: Tolerance for the functional equation at general s.
FUNCTIONAL_EQUATION_TOL = 1e-8

#: Tolerance for the extrapolated binomial series leg of the period chain.
SERIES_LEG_TOL = 1e-6

#: Euler product of the twisted series at s = 1, primes <= 10**7.
#: Measured error 2.80e-5 (tests/fixtures/euler_product_curve.json); floor set
#: with headroom for platform-dependent rounding of the 664578-factor product.
EULER_PRODUCT_TOL = 1e-4
EULER_PRODUCT_PRIMES = 10**7

#: zeta(M, 1) from the accelerated sum against pi/4.
ACCELERATED_TOL = 1e-12

#: Terms used by the Euler-transformed alternating sum.
ACCELERATED_TERMS = 64
