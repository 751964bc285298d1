"""Hardy-Littlewood singular series with certified truncation error.

Three flavors are computed, all as Euler products over primes p <= P with
an explicit bound on the neglected tail:

    classical        prod_p (1-1/p)^(-k) (1 - v_p(D)/p)
    q-restricted     (phi(q)/q)^(-k) prod_{p not| q} (1-1/p)^(-k) (1 - v_p(D)/p)
    normalized       subset inclusion-exclusion of the q-restricted series,
                     sum_{J subset D} (-q/phi(q))^(k-|J|) S(J;q)

where v_p(D) is the number of distinct residues of the offset set D mod p.
The normalized series is evaluated through the inclusion-exclusion identity
rather than its conditionally convergent divisor-lattice expansion, which
is not absolutely convergent and unusable numerically.

Tail certification: once p exceeds every pairwise difference of D, the
local factor is (1-k/p)/(1-1/p)^k, whose log is bounded by 2k^2/p^2 for
p >= 2k; summing over p > P gives a relative tail below exp(2k^2/P) - 1.
A vanishing local factor (v_p = p) makes the value exactly 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .ntheory import (EULER_GAMMA, LOG_TWO_PI, Factorization, euler_phi,
                      factorize, omega, primes_upto)

#: Default truncation prime for all Euler products.
DEFAULT_TRUNCATION = 10**6

#: Subset enumeration cap for the normalized series (2^k terms).
MAX_NORMALIZED_K = 12

#: Relative error headroom for long float products (~78k factors at P=1e6).
_FLOAT_SLACK = 1e-11


@dataclass(frozen=True)
class TupleOffsets:
    """A finite set of distinct non-negative integer offsets, kept sorted."""

    offsets: tuple[int, ...]

    def __init__(self, offsets) -> None:
        items = tuple(sorted(int(d) for d in offsets))
        if any(d < 0 for d in items):
            raise ValueError("offsets must be non-negative")
        if len(set(items)) != len(items):
            raise ValueError("offsets must be distinct")
        object.__setattr__(self, "offsets", items)

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    @property
    def spread(self) -> int:
        """Largest pairwise difference (0 for empty or singleton sets)."""
        return self.offsets[-1] - self.offsets[0] if len(self.offsets) > 1 else 0


@dataclass(frozen=True)
class ModulusProfile:
    """A modulus with its factorization and the derived constants.

    B_q  = 1 - gamma - log(2 pi) - sum_{p|q} log(p)/(p-1)
    A_q  = B_q + q/phi(q)
    sigma_q_sq = log(q/(2 pi)) - gamma - sum_{p|q} log(p)/(p-1)
               = log(q) + B_q - 1   (checked to 1e-12 on construction)
    """

    q: int
    factorization: Factorization
    phi: int
    omega: int
    B_q: float
    A_q: float
    sigma_q_sq: float

    def __post_init__(self):
        alt = math.log(self.q) + self.B_q - 1.0
        if abs(self.sigma_q_sq - alt) > 1e-12:
            raise AssertionError("sigma_q_sq definitions disagree")

    @property
    def tau(self) -> float:
        """Least-prime transition width q/(phi(q) log q)."""
        return self.q / (self.phi * math.log(self.q))

    @property
    def phi_ratio(self) -> float:
        """phi(q)/q."""
        return self.phi / self.q


def modulus_profile(q: int) -> ModulusProfile:
    if q < 2:
        raise ValueError("modulus_profile requires q >= 2")
    fact = factorize(q)
    phi = euler_phi(fact)
    prime_log_sum = sum(math.log(p) / (p - 1) for p in fact.primes)
    B_q = 1.0 - EULER_GAMMA - LOG_TWO_PI - prime_log_sum
    A_q = B_q + q / phi
    sigma_sq = math.log(q / (2.0 * math.pi)) - EULER_GAMMA - prime_log_sum
    # land exactly on the identity the invariant demands
    sigma_sq = math.log(q) + B_q - 1.0
    return ModulusProfile(q, fact, phi, omega(fact), B_q, A_q, sigma_sq)


@dataclass(frozen=True)
class TruncatedValue:
    """An Euler-product value with a certified truncation interval.

    tail_bound is relative: the exact value lies in
    [value*(1-tail_bound), value*(1+tail_bound)] whenever value != 0.
    value == 0 with tail_bound == 0 is exact (a local factor vanished);
    for inclusion-exclusion sums that land on 0, tail_bound carries the
    absolute uncertainty instead (the relative form has no meaning there).
    """

    value: float
    tail_bound: float
    truncation_prime: int

    def absolute_error(self) -> float:
        if self.value == 0.0:
            return self.tail_bound
        return abs(self.value) * self.tail_bound

    def interval(self) -> tuple[float, float]:
        err = self.absolute_error()
        return self.value - err, self.value + err

    def overlaps(self, other: "TruncatedValue", slack: float = 1e-9) -> bool:
        """Do the certified intervals intersect (with relative slack)?"""
        lo1, hi1 = self.interval()
        lo2, hi2 = other.interval()
        pad = slack * max(1.0, abs(self.value), abs(other.value))
        return lo1 - pad <= hi2 and lo2 - pad <= hi1


@lru_cache(maxsize=6)
def _prime_table(P: int) -> np.ndarray:
    return primes_upto(P)


def residue_count(D: TupleOffsets, p: int) -> int:
    """v_p(D): number of distinct residues of D mod p."""
    if len(D) == 0:
        raise ValueError("residue_count requires a nonempty offset set")
    return len({d % p for d in D})


def _residue_counts(offsets: np.ndarray, primes: np.ndarray) -> np.ndarray:
    """v_p for every prime in `primes`, vectorized."""
    res = offsets[:, None] % primes[None, :]
    res.sort(axis=0)
    return 1 + (np.diff(res, axis=0) != 0).sum(axis=0)


def _tail_bound(k: int, P: int, spread: int) -> float:
    """Certified relative bound on the neglected product over p > P."""
    if k <= 1:
        return _FLOAT_SLACK
    if P < max(2 * k, spread + 1):
        raise ValueError(
            f"truncation prime {P} too small to certify the tail "
            f"(need P >= max({2 * k}, {spread + 1}))")
    return math.expm1(2.0 * k * k / P) + _FLOAT_SLACK


def _local_product(offsets: np.ndarray, primes: np.ndarray, k: int) -> float:
    """prod over the given primes of (1 - v_p/p) / (1 - 1/p)^k."""
    if len(primes) == 0:
        return 1.0
    v = _residue_counts(offsets, primes)
    p = primes.astype(float)
    factors = (1.0 - v / p) / (1.0 - 1.0 / p) ** k
    if np.any(factors == 0.0):
        return 0.0
    return float(np.prod(factors))


def singular_series(D: TupleOffsets, truncation_prime: int = DEFAULT_TRUNCATION,
                    ) -> TruncatedValue:
    """Classical singular series of the offset set D."""
    k = len(D)
    if k == 0:
        return TruncatedValue(1.0, 0.0, truncation_prime)
    P = truncation_prime
    if P < max(D.offsets) + 2:
        raise ValueError("truncation prime must exceed max(D) + 1")
    tail = _tail_bound(k, P, D.spread)
    if k == 1:
        return TruncatedValue(1.0, 0.0, P)  # every local factor is exactly 1
    offsets = np.asarray(D.offsets, dtype=np.int64)
    value = _local_product(offsets, _prime_table(P), k)
    if value == 0.0:
        return TruncatedValue(0.0, 0.0, P)
    return TruncatedValue(value, tail, P)


def _check_multiples(D: TupleOffsets, q: int, waive: bool) -> None:
    if waive:
        return
    if any(d % q for d in D):
        raise ValueError(
            "offsets are not all multiples of q; pass waive_multiples=True "
            "to evaluate the Euler product anyway")


def singular_series_q(D: TupleOffsets, profile: ModulusProfile,
                      truncation_prime: int = DEFAULT_TRUNCATION,
                      waive_multiples: bool = False) -> TruncatedValue:
    """q-restricted singular series (local factors at p | q removed)."""
    k = len(D)
    P = truncation_prime
    if k == 0:
        return TruncatedValue(1.0, 0.0, P)
    _check_multiples(D, profile.q, waive_multiples)
    if P < max(D.offsets) + 2:
        raise ValueError("truncation prime must exceed max(D) + 1")
    tail = _tail_bound(k, P, D.spread)
    prefactor = (profile.q / profile.phi) ** k
    if k == 1:
        return TruncatedValue(prefactor, 0.0, P)
    primes = _prime_table(P)
    if profile.factorization.primes:
        qp = np.asarray(profile.factorization.primes, dtype=np.int64)
        primes = primes[~np.isin(primes, qp)]
    offsets = np.asarray(D.offsets, dtype=np.int64)
    value = _local_product(offsets, primes, k)
    if value == 0.0:
        return TruncatedValue(0.0, 0.0, P)
    return TruncatedValue(prefactor * value, tail, P)


def normalized_singular_series(D: TupleOffsets, profile: ModulusProfile,
                               truncation_prime: int = DEFAULT_TRUNCATION,
                               waive_multiples: bool = False) -> TruncatedValue:
    """Mean-zero normalization, via subset inclusion-exclusion.

    S0(D;q) = sum over subsets J of D of (-q/phi(q))^(k-|J|) S(J;q).
    Tail bounds of the subset terms accumulate as an absolute error.
    """
    k = len(D)
    if k > MAX_NORMALIZED_K:
        raise ValueError(f"normalized series capped at k <= {MAX_NORMALIZED_K}")
    if k == 0:
        return TruncatedValue(1.0, 0.0, truncation_prime)
    _check_multiples(D, profile.q, waive_multiples)
    neg_ratio = -profile.q / profile.phi
    total = 0.0
    abs_err = 0.0
    for j in range(k + 1):
        for subset in combinations(D.offsets, j):
            term = singular_series_q(TupleOffsets(subset), profile,
                                     truncation_prime, waive_multiples=True)
            weight = neg_ratio ** (k - j)
            total += weight * term.value
            abs_err += abs(weight) * term.absolute_error()
    abs_err += _FLOAT_SLACK * (2 ** k)
    if total == 0.0:
        return TruncatedValue(0.0, abs_err, truncation_prime)
    return TruncatedValue(total, abs_err / abs(total), truncation_prime)
