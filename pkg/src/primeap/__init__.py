"""Statistics of primes in arithmetic progressions to a large modulus.

A numpy-backed library plus CLI covering: exact prime enumeration and
arithmetic functions, Hardy-Littlewood singular series with certified
truncation error, per-class counting statistics (psi, pi, least primes,
prime pairs), moment comparisons against Gaussian and Poissonian
predictions, the least-prime exponential law, and the modified piecewise
least-prime prediction for smooth moduli.
"""

from .ntheory import (EULER_GAMMA, LOG_TWO_PI, Factorization, PrimeRange,
                      euler_phi, factorize, gaussian_moment, mobius, omega,
                      primes_upto, ramanujan_sum, sieve_range, stirling2)
from .singular import (ModulusProfile, TruncatedValue, TupleOffsets,
                       modulus_profile, normalized_singular_series,
                       residue_count, singular_series, singular_series_q)
from .apstats import (APCountTable, IncompleteTableError, LeastPrimeTable,
                      MomentReport, ap_counts, class_count,
                      empirical_pi_moment, empirical_psi_moment, exp_sum,
                      exp_sum_bound, least_primes, pair_count,
                      poisson_moment_prediction, predicted_psi_moment,
                      predicted_psi_moment_closed, primorial_coprime,
                      psi_moment_k1_collapse, psi_moment_report,
                      reduced_residues, rk_direct, sum_singular_direct,
                      v2_asymptotic, v2_exact, vk_direct, vk_fourier)
from .distributions import (EmpiricalCdf, Histogram, ModifiedPrediction,
                            PredictionCurve, comparison_grid,
                            empirical_curve, exponential_cdf,
                            exponential_curve, exponential_pdf,
                            least_prime_histogram, least_prime_values,
                            modified_curve, modified_least_prime_cdf,
                            poisson_pmf, poisson_total_variation,
                            standardize_psi, sup_distance)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
