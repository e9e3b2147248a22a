"""Point counts, L-series and the real period of the conic x^2 + y^2 = z^2."""

from .analysis import period_chain_check, series_S, series_S_extrapolated, wallis
from .arith import PrimeSieve, chi, chi_hat, factorize
from .checks import IdentityCheck, SeriesEstimate, VerificationReport
from .counting import PointCount, count_affine_bruteforce, count_affine_formula, count_total, scan_primes
from .field_arith import FiniteField, Polynomial, PrimePower, find_irreducible, is_irreducible
from .lseries import (
    euler_product,
    functional_equation_check,
    zeta_accelerated,
    zeta_hat_closed_form,
    zeta_hat_partial,
    zeta_partial,
)
from .quadrature import QuadratureResult, integrate, tanh_sinh

__version__ = "0.1.0"
