"""Binned empirical distributions, reference laws, and distance metrics.

Least primes are studied in the scale-free variable t = p(q,a)/(phi(q) log q).
Reference laws:

    exponential      F(t) = 1 - exp(-t)
    poisson          pmf(k) = exp(-lam) lam^k / k!
    gaussian         standardized psi counts against N(0,1)
    modified         piecewise-linear least-prime CDF whose slope changes at
                     every multiple of tau = q/(phi(q) log q)

The modified prediction: in the j-th segment only primes whose j-1
predecessors p - iq are all composite contribute a new least prime.
Writing S(0, i1 q, ..., im q) for the prime-tuple constants, inclusion-
exclusion over which predecessors are prime gives the slope

    slope_j = 1 + 1/log q
              + sum over nonempty S of {1..j-1} of
                (-1)^|S| S({0} u {iq : i in S}) / (log q)^|S|,

which for j = 1 and j = 2 is exactly (1 + 1/log q) and
(1 + (1 - S({0,q}))/log q), the two displayed transition segments.  Subset
enumeration is capped (2^(j-1) terms); beyond the cap the slope continues
in survival form, (1 + 1/log q) prod_{m<j} (1 - S({0,mq})/log q), which
decays geometrically and keeps total mass near 1.  Slopes are floored at 0
and the cumulative curve is capped at 1, so the result is always a valid
piecewise-linear CDF with breakpoints at the multiples of tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .apstats import APCountTable, LeastPrimeTable
from .singular import (DEFAULT_TRUNCATION, ModulusProfile, TupleOffsets,
                       singular_series_q)

DEFAULT_BIN_WIDTH = 0.1
DEFAULT_T_MAX = 5.0
DEFAULT_SEGMENT_CAP = 8


@dataclass(frozen=True)
class Histogram:
    """Counts of values over bins (i*w, (i+1)*w] covering [0, t_max].

    total includes the overflow mass beyond t_max, kept in a separate
    bucket so that bin mass plus overflow always equals the sample count.
    density(i) = (counts[i]/total)/bin_width.
    """

    bin_width: float
    counts: np.ndarray
    overflow: int
    total: int

    def __post_init__(self):
        if int(self.counts.sum()) + self.overflow != self.total:
            raise ValueError("histogram mass does not add up")

    @property
    def edges(self) -> np.ndarray:
        """Bin edges 0, w, 2w, ..., n*w (length len(counts)+1)."""
        return np.arange(len(self.counts) + 1) * self.bin_width

    def density(self) -> np.ndarray:
        return self.counts / self.total / self.bin_width

    def cdf_at_edges(self) -> np.ndarray:
        """Empirical CDF at every bin edge (exact there)."""
        return np.concatenate([[0.0], np.cumsum(self.counts)]) / self.total


def least_prime_histogram(table: LeastPrimeTable, profile: ModulusProfile,
                          bin_width: float = DEFAULT_BIN_WIDTH,
                          t_max: float = DEFAULT_T_MAX) -> Histogram:
    """Bin p(q,a)/(phi(q) log q) over (t, t+w] bins."""
    if table.q != profile.q:
        raise ValueError("table and profile describe different moduli")
    values = least_prime_values(table, profile)
    nbins = math.ceil(t_max / bin_width)
    idx = np.ceil(values / bin_width).astype(np.int64) - 1
    idx[idx < 0] = 0
    overflow = int((idx >= nbins).sum())
    counts = np.bincount(idx[idx < nbins], minlength=nbins)
    return Histogram(bin_width, counts, overflow, len(values))


def least_prime_values(table: LeastPrimeTable,
                       profile: ModulusProfile) -> np.ndarray:
    """p(q,a)/(phi(q) log q) for every reduced class, ascending order."""
    scale = profile.phi * math.log(profile.q)
    return np.sort(table.least / scale)


class EmpiricalCdf:
    """Exact empirical CDF of a sample, F(t) = #{v <= t}/n."""

    def __init__(self, values: np.ndarray):
        self.values = np.sort(np.asarray(values, dtype=np.float64))
        self.n = len(self.values)

    def __call__(self, t) -> np.ndarray:
        return np.searchsorted(self.values, t, side="right") / self.n


def exponential_cdf(t: float) -> float:
    """1 - exp(-t); the limiting least-prime law."""
    if t < 0:
        raise ValueError("exponential_cdf requires t >= 0")
    return -math.expm1(-t)


def exponential_pdf(t: float) -> float:
    if t < 0:
        raise ValueError("exponential_pdf requires t >= 0")
    return math.exp(-t)


def poisson_pmf(k: int, lam: float) -> float:
    """exp(-lam) lam^k / k!."""
    if k < 0:
        raise ValueError("poisson_pmf requires k >= 0")
    if lam <= 0:
        raise ValueError("poisson_pmf requires lam > 0")
    return math.exp(-lam + k * math.log(lam) - math.lgamma(k + 1))


def standardize_psi(table: APCountTable, profile: ModulusProfile) -> np.ndarray:
    """(psi(N;q,a) - N/phi(q)) / (sigma_q sqrt(N/phi(q))) per reduced class."""
    if profile.sigma_q_sq <= 0:
        raise ValueError(
            f"sigma_q^2 = {profile.sigma_q_sq:.6f} <= 0 for q = {profile.q}; "
            "the Gaussian standardization needs a larger modulus")
    phi = table.phi
    scale = math.sqrt(profile.sigma_q_sq) * math.sqrt(table.N / phi)
    return (table.psi - table.N / phi) / scale


# ---------------------------------------------------------------------------
# the modified least-prime prediction


@dataclass(frozen=True)
class PredictionCurve:
    """A reference CDF sampled on a t-grid."""

    ts: np.ndarray
    Fs: np.ndarray
    kind: str

    def __post_init__(self):
        if len(self.ts) != len(self.Fs):
            raise ValueError("grid and values differ in length")
        if np.any(np.diff(self.Fs) < -1e-12):
            raise ValueError(f"{self.kind} curve is not non-decreasing")
        if self.Fs.size and (self.Fs[0] < -1e-12 or self.Fs.max() > 1 + 1e-12):
            raise ValueError(f"{self.kind} curve leaves [0, 1]")


class ModifiedPrediction:
    """Piecewise-linear least-prime CDF with pair/tuple-correlation slopes."""

    def __init__(self, profile: ModulusProfile,
                 truncation_prime: int = DEFAULT_TRUNCATION,
                 segment_cap: int = DEFAULT_SEGMENT_CAP,
                 t_max: float = DEFAULT_T_MAX):
        self.profile = profile
        self.truncation_prime = truncation_prime
        self.segment_cap = segment_cap
        self.log_q = math.log(profile.q)
        self.tau = profile.tau
        nseg = max(1, math.ceil(t_max / self.tau + 1e-12)) + 1
        self._build(nseg)

    @lru_cache(maxsize=None)
    def tuple_constant(self, offsets: tuple[int, ...]) -> float:
        """Prime-tuple constant of {0} u {i q : i in offsets}.

        Scaling the offsets by q leaves the q-restricted series unchanged,
        so the full constant is (phi/q) times the restricted series of the
        unscaled set."""
        D = TupleOffsets((0,) + tuple(offsets))
        val = singular_series_q(D, self.profile, self.truncation_prime,
                                waive_multiples=True).value
        return self.profile.phi_ratio * val

    @lru_cache(maxsize=None)
    def pair_constant(self, m: int) -> float:
        return self.tuple_constant((m,))

    def raw_slope(self, j: int) -> float:
        """Slope of segment j before the monotone/mass guards."""
        if j <= self.segment_cap:
            slope = 1.0 + 1.0 / self.log_q
            prev = range(1, j)
            for size in range(1, j):
                for S in combinations(prev, size):
                    slope += ((-1) ** size * self.tuple_constant(S)
                              / self.log_q ** size)
            return slope
        # survival continuation beyond the enumeration cap
        slope = 1.0 + 1.0 / self.log_q
        for m in range(1, j):
            s = min(max(self.pair_constant(m) / self.log_q, 0.0), 1.0)
            slope *= 1.0 - s
        return slope

    def _build(self, nseg: int) -> None:
        slopes = []
        F = [0.0]
        level = 0.0
        for j in range(1, nseg + 1):
            slope = max(self.raw_slope(j), 0.0)
            if level + slope * self.tau > 1.0:
                slope = (1.0 - level) / self.tau
            level += slope * self.tau
            slopes.append(slope)
            F.append(level)
        self.slopes = np.array(slopes)
        self.F_at_breaks = np.array(F)

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        j = np.minimum((t / self.tau).astype(np.int64), len(self.slopes) - 1)
        j = np.maximum(j, 0)
        out = self.F_at_breaks[j] + self.slopes[j] * (t - j * self.tau)
        return np.minimum(np.where(t < 0, 0.0, out), 1.0)

    def breakpoints(self, t_max: float = DEFAULT_T_MAX) -> np.ndarray:
        n = int(math.floor(t_max / self.tau + 1e-12))
        return self.tau * np.arange(1, n + 1)


@lru_cache(maxsize=16)
def _modified_cached(profile: ModulusProfile, truncation_prime: int,
                     segment_cap: int, t_max: float) -> ModifiedPrediction:
    return ModifiedPrediction(profile, truncation_prime, segment_cap, t_max)


def modified_least_prime_cdf(t: float, profile: ModulusProfile,
                             truncation_prime: int = DEFAULT_TRUNCATION,
                             segment_cap: int = DEFAULT_SEGMENT_CAP,
                             t_max: float = DEFAULT_T_MAX) -> float:
    """Modified least-prime CDF at t (piecewise linear, breaks at j*tau)."""
    if t < 0:
        raise ValueError("modified_least_prime_cdf requires t >= 0")
    # quantize the build range so scattered t values share one cache entry
    t_max = DEFAULT_T_MAX * math.ceil(max(t_max, t) / DEFAULT_T_MAX)
    pred = _modified_cached(profile, truncation_prime, segment_cap, t_max)
    return float(pred(t))


def modified_curve(profile: ModulusProfile, ts: np.ndarray,
                   truncation_prime: int = DEFAULT_TRUNCATION,
                   segment_cap: int = DEFAULT_SEGMENT_CAP) -> PredictionCurve:
    t_max = float(ts.max()) if len(ts) else DEFAULT_T_MAX
    pred = _modified_cached(profile, truncation_prime, segment_cap,
                            max(t_max, DEFAULT_T_MAX))
    return PredictionCurve(ts, pred(ts), "modified")


def exponential_curve(ts: np.ndarray) -> PredictionCurve:
    return PredictionCurve(ts, -np.expm1(-np.asarray(ts, dtype=np.float64)),
                           "exponential")


def empirical_curve(values: np.ndarray, ts: np.ndarray) -> PredictionCurve:
    return PredictionCurve(ts, EmpiricalCdf(values)(ts), "empirical")


def sup_distance(a: PredictionCurve, b: PredictionCurve) -> float:
    """Max |F_a - F_b| over the common grid (bin edges plus breakpoints)."""
    if len(a.ts) != len(b.ts) or not np.array_equal(a.ts, b.ts):
        raise ValueError("sup_distance requires a common t-grid")
    return float(np.max(np.abs(a.Fs - b.Fs)))


def comparison_grid(profile: ModulusProfile,
                    bin_width: float = DEFAULT_BIN_WIDTH,
                    t_max: float = DEFAULT_T_MAX,
                    include_breakpoints: bool = True) -> np.ndarray:
    """Bin edges on [0, t_max], plus the modified-prediction breakpoints."""
    edges = np.arange(math.ceil(t_max / bin_width) + 1) * bin_width
    if not include_breakpoints:
        return edges
    n = int(math.floor(t_max / profile.tau + 1e-12))
    breaks = profile.tau * np.arange(1, n + 1)
    return np.unique(np.concatenate([edges, breaks]))


def poisson_total_variation(counts: np.ndarray, lam: float) -> float:
    """Total-variation distance between the empirical count distribution
    and Poisson(lam), on the support {0..ceil(10 lam)} with the two tails
    compared as lump masses (an honest partition of the line)."""
    counts = np.asarray(counts)
    n = len(counts)
    kmax = max(int(math.ceil(10 * lam)), int(counts.max()))
    emp = np.bincount(counts, minlength=kmax + 1)[: kmax + 1] / n
    pois = np.array([poisson_pmf(k, lam) for k in range(kmax + 1)])
    return 0.5 * (np.abs(emp - pois).sum()
                  + abs((1.0 - emp.sum()) - (1.0 - pois.sum())))
