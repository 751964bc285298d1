"""Counting statistics over residue classes of a fixed modulus.

Covers the weighted prime count psi(N;q,a), the plain count pi(N;q,a),
least primes p(q,a), prime pairs at a fixed gap, empirical and predicted
moments of the standardized counts, and both sides of the exactly testable
divisor-lattice identity

    V_k(Q;q,a) = (1/Q) sum_{m mod Q} ( sum_{n<=N, n=a(q)}
                 ((phi(Q)/Q)^{-1} 1_{(n+m,Q)=1} - 1) )^k
               = sum_{1<r_i|Q} prod mu(r_i)/phi(r_i)
                 sum*_{b_i mod r_i, sum b_i/r_i integral} prod E_{q,a}(b_i/r_i)

with E_{q,a}(alpha) the class exponential sum.  The identity is exact, so
the two implementations must agree to floating accumulation error; the
test suite drives a full grid through both.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .ntheory import (DEFAULT_SEGMENT, factorize, gaussian_moment,
                      iter_prime_segments, primes_upto, sieve_range, stirling2)
from .singular import (DEFAULT_TRUNCATION, ModulusProfile, TupleOffsets,
                       modulus_profile, normalized_singular_series,
                       singular_series_q)


class IncompleteTableError(RuntimeError):
    """Raised when a least-prime scan hits its ceiling with classes open."""

    def __init__(self, q: int, ceiling: int, remaining: list[int]):
        self.q = q
        self.ceiling = ceiling
        self.remaining = remaining
        shown = ", ".join(map(str, remaining[:8]))
        more = f" (+{len(remaining) - 8} more)" if len(remaining) > 8 else ""
        super().__init__(
            f"least-prime table for q={q} incomplete at ceiling {ceiling}: "
            f"classes [{shown}]{more} unfilled; retry with a larger ceiling")


def reduced_residues(q: int) -> np.ndarray:
    """Residues a in [1, q) with gcd(a, q) = 1, ascending."""
    if q < 2:
        raise ValueError("reduced_residues requires q >= 2")
    r = np.arange(q, dtype=np.int64)
    return np.flatnonzero(np.gcd(r, q) == 1).astype(np.int64)


def class_count(N: int, q: int, a: int) -> int:
    """H = #{1 <= n <= N : n = a (mod q)} for 1 <= a <= q."""
    return (N - a) // q + 1 if a <= N else 0


# ---------------------------------------------------------------------------
# count tables


@dataclass(frozen=True)
class APCountTable:
    """Per-reduced-residue counts for fixed (N, q).

    psi[i]               sum of Lambda(n) over n <= N in class residues[i]
    pi[i]                number of primes <= N in the class
    weighted_log_sum[i]  sum of log(qn/N) + B_q over ALL n <= N in the class
    H[i]                 number of class members <= N
    """

    q: int
    N: int
    B_q: float
    residues: np.ndarray
    psi: np.ndarray
    pi: np.ndarray
    weighted_log_sum: np.ndarray
    H: np.ndarray

    @property
    def phi(self) -> int:
        return len(self.residues)


def ap_counts(N: int, q: int, segment: int = DEFAULT_SEGMENT,
              B_q: float | None = None) -> APCountTable:
    """Single pass over the primes filling psi, pi and the weighted log sums.

    psi carries the full von Mangoldt weight (prime powers p^j <= N add
    log p); pi counts primes only.  The weighted log sums are evaluated in
    closed form through log-gamma, which agrees with direct summation to
    rounding error.
    """
    if not 2 <= q <= N:
        raise ValueError("ap_counts requires 2 <= q <= N")
    if B_q is None:
        B_q = modulus_profile(q).B_q

    psi_full = np.zeros(q, dtype=np.float64)
    pi_full = np.zeros(q, dtype=np.int64)
    for seg in iter_prime_segments(N, segment):
        p = seg.primes()
        if len(p) == 0:
            continue
        res = p % q
        psi_full += np.bincount(res, weights=np.log(p), minlength=q)
        pi_full += np.bincount(res, minlength=q)
    # prime powers p^j <= N contribute log p to psi only
    for p in primes_upto(math.isqrt(N)):
        p = int(p)
        lp = math.log(p)
        v = p * p
        while v <= N:
            psi_full[v % q] += lp
            v *= p

    residues = reduced_residues(q)
    a = residues.astype(np.float64)
    H = (N - residues) // q + 1
    # sum of log n over the class, via log Gamma
    delta = gammaln(a / q + H) - gammaln(a / q)
    log_n_sum = H * math.log(q) + delta
    wls = log_n_sum + H * (math.log(q) - math.log(N) + B_q)

    return APCountTable(q, N, B_q, residues, psi_full[residues],
                        pi_full[residues], wls, H)


@dataclass(frozen=True)
class LeastPrimeTable:
    """p(q,a) for every reduced residue a mod q."""

    q: int
    residues: np.ndarray
    least: np.ndarray
    scan_ceiling: int

    @property
    def phi(self) -> int:
        return len(self.residues)


def default_scan_ceiling(q: int) -> int:
    return int(max(q * math.log(q) ** 3, 10**6))


def least_primes(q: int, ceiling: int | None = None,
                 segment: int = 1 << 20) -> LeastPrimeTable:
    """Scan primes in increasing order until every reduced class has one.

    Raises IncompleteTableError when the ceiling is reached first; the
    caller may retry with a larger ceiling.
    """
    if q < 3:
        raise ValueError("least_primes requires q >= 3")
    if ceiling is None:
        ceiling = default_scan_ceiling(q)
    residues = reduced_residues(q)
    phi = len(residues)
    reduced_mask = np.zeros(q, dtype=bool)
    reduced_mask[residues] = True
    table = np.zeros(q, dtype=np.int64)
    filled = 0
    for seg in iter_prime_segments(ceiling, segment):
        p = seg.primes()
        if len(p) == 0:
            continue
        res = p % q
        uniq, first = np.unique(res, return_index=True)
        new = reduced_mask[uniq] & (table[uniq] == 0)
        table[uniq[new]] = p[first[new]]
        filled += int(new.sum())
        if filled == phi:
            break
    if filled < phi:
        remaining = [int(a) for a in residues if table[a] == 0]
        raise IncompleteTableError(q, ceiling, remaining)
    return LeastPrimeTable(q, residues, table[residues], ceiling)


def pair_count(x: int, q: int, segment: int = DEFAULT_SEGMENT) -> int:
    """#{p <= x : p and p + q both prime}, exact by double sieve."""
    if x < 2 or q < 2:
        raise ValueError("pair_count requires x >= 2 and q >= 2")
    total = 0
    lo = 2
    while lo <= x:
        hi = min(lo + segment - 1, x)
        pr = sieve_range(lo, hi + q)
        w = hi - lo + 1
        total += int(np.sum(pr.mask[:w] & pr.mask[q: q + w]))
        lo = hi + 1
    return total


# ---------------------------------------------------------------------------
# moments


def empirical_psi_moment(table: APCountTable, K: int) -> float:
    """Exact K-th sample moment of the standardized centered psi counts."""
    if K < 0:
        raise ValueError("moment order must be >= 0")
    q, N, phi = table.q, table.N, table.phi
    centered = table.psi - (q / phi) * table.H
    scaled = centered / math.sqrt(N / phi)
    return float(np.mean(scaled**K))


def psi_moment_k1_collapse(table: APCountTable) -> float:
    """Closed collapse of the K=1 moment:
    (phi(q) N)^{-1/2} (sum_{(n,q)=1} Lambda(n) - (q/phi) #{n<=N:(n,q)=1})."""
    q, N, phi = table.q, table.N, table.phi
    return (float(table.psi.sum()) - (q / phi) * float(table.H.sum())) \
        / math.sqrt(phi * N)


def predicted_psi_moment(table: APCountTable, profile: ModulusProfile,
                         K: int) -> float:
    """Main-term prediction mu_K * mean_a ((q/N) weighted_log_sum_a)^(K/2)."""
    if K < 0:
        raise ValueError("moment order must be >= 0")
    mu = gaussian_moment(K)
    if mu == 0:
        return 0.0
    base = (table.q / table.N) * table.weighted_log_sum
    return mu * float(np.mean(base ** (K // 2)))


def predicted_psi_moment_closed(profile: ModulusProfile, K: int) -> float:
    """Closed form mu_K (log q + B_q - 1)^(K/2)."""
    mu = gaussian_moment(K)
    if mu == 0:
        return 0.0
    return mu * (math.log(profile.q) + profile.B_q - 1.0) ** (K // 2)


def empirical_pi_moment(table: APCountTable, k: int) -> float:
    """Exact k-th sample moment of pi(N;q,a) over reduced classes."""
    if k < 1:
        raise ValueError("pi moment order must be >= 1")
    return float(np.mean(table.pi.astype(np.float64) ** k))


@dataclass(frozen=True)
class MomentReport:
    """One row of a psi-moment comparison at fixed (q, N, K)."""

    q: int
    N: int
    K: int
    empirical: float
    predicted_main_term: float
    predicted_closed_form: float

    def __post_init__(self):
        expected = predicted_psi_moment_closed(modulus_profile(self.q), self.K)
        if abs(self.predicted_closed_form - expected) > 1e-12 * max(
                1.0, abs(expected)):
            raise AssertionError("closed-form field disagrees with mu_K "
                                 "(log q + B_q - 1)^(K/2)")


def psi_moment_report(table: APCountTable, profile: ModulusProfile,
                      K: int) -> MomentReport:
    return MomentReport(table.q, table.N, K,
                        empirical_psi_moment(table, K),
                        predicted_psi_moment(table, profile, K),
                        predicted_psi_moment_closed(profile, K))


def poisson_moment_prediction(k: int, lam: float) -> float:
    """sum_{j=1}^{k} S(k,j) lam^j (power moments of a Poisson law)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    return sum(stirling2(k, j) * lam**j for j in range(1, k + 1))


# ---------------------------------------------------------------------------
# class exponential sums and the divisor-lattice identity


def exp_sum(b: int, r: int, q: int, a: int, N: int) -> complex:
    """E_{q,a}(b/r) = sum over n <= N, n = a (mod q) of e(n b / r).

    Closed geometric form, with phases reduced by exact integer
    arithmetic so the result stays accurate for large N.
    """
    if r < 1:
        raise ValueError("denominator r must be >= 1")
    if math.gcd(a, q) != 1:
        raise ValueError("exp_sum requires (a, q) = 1")
    a = a % q if a % q else q
    H = class_count(N, q, a)
    if H == 0:
        return 0j
    c = (b * q) % r
    phase0 = cmath.exp(2j * cmath.pi * ((a * b) % r) / r)
    if c == 0:
        return phase0 * H
    # sum_{h<H} e(hc/r) = e(c(H-1)/(2r)) sin(pi c H / r) / sin(pi c / r)
    half = cmath.exp(1j * cmath.pi * ((c * (H - 1)) % (2 * r)) / r)
    num = math.sin(math.pi * ((c * H) % (2 * r)) / r)
    den = math.sin(math.pi * c / r)
    return phase0 * half * (num / den)


def exp_sum_bound(b: int, r: int, q: int, N: int) -> float:
    """min(N/q + 1, ||bq/r||^{-1}): the standard bound on |E_{q,a}(b/r)|."""
    c = (b * q) % r
    dist = min(c, r - c) / r
    if dist == 0:
        return N / q + 1
    return min(N / q + 1, 1.0 / dist)


def _squarefree_divisors(Q: int) -> list[int]:
    """Squarefree divisors > 1 of Q, from its distinct primes."""
    primes = factorize(Q).primes
    divs = [1]
    for p in primes:
        divs += [d * p for d in divs]
    return sorted(d for d in divs if d > 1)


@lru_cache(maxsize=None)
def _reduced_list(r: int) -> tuple[int, ...]:
    return tuple(b for b in range(1, r + 1) if math.gcd(b, r) == 1)


def _mu_over_phi(r: int) -> float:
    f = factorize(r)
    mu = -1.0 if len(f.pairs) % 2 else 1.0
    phi = 1
    for p, _ in f.pairs:
        phi *= p - 1
    return mu / phi


def vk_fourier(Q: int, q: int, a: int, N: int, k: int) -> float:
    """Divisor-lattice side of the identity: enumerate squarefree r_i > 1
    dividing Q and reduced tuples (b_i) whose fractions sum to an integer.

    Enumeration budget: omega(Q) <= 4 and k <= 4.
    """
    if math.gcd(q, Q) != 1:
        raise ValueError("vk_fourier requires (q, Q) = 1")
    if math.gcd(a, q) != 1:
        raise ValueError("vk_fourier requires (a, q) = 1")
    if N < 2 * q:
        raise ValueError("vk_fourier requires N >= 2q")
    if k < 0 or k > 4:
        raise ValueError("vk_fourier supports 0 <= k <= 4")
    if len(factorize(Q).pairs) > 4:
        raise ValueError("vk_fourier enumeration budget is omega(Q) <= 4")
    if k == 0:
        return 1.0

    divisors = _squarefree_divisors(Q)
    div_set = set(divisors)
    weights = {r: _mu_over_phi(r) for r in divisors}
    evals = {(b, r): exp_sum(b, r, q, a, N)
             for r in divisors for b in _reduced_list(r)}

    total = 0j

    def recurse(i: int, frac: Fraction, weight: float, prod: complex) -> None:
        nonlocal total
        if i == k - 1:
            # last fraction is forced: b/r = -frac (mod 1), already reduced
            rem = (-frac) % 1
            if rem == 0:
                return  # no reduced b/r with r > 1 is an integer
            t, c = rem.denominator, rem.numerator
            if t in div_set:
                total += weight * weights[t] * prod * evals[(c, t)]
            return
        for r in divisors:
            w = weight * weights[r]
            for b in _reduced_list(r):
                recurse(i + 1, frac + Fraction(b, r), w, prod * evals[(b, r)])

    recurse(0, Fraction(0), 1.0, 1 + 0j)
    if abs(total.imag) >= 1e-8:
        raise ArithmeticError(
            f"vk_fourier imaginary part {total.imag:.3e} exceeds 1e-8")
    return float(total.real)


def vk_direct(Q: int, q: int, a: int, N: int, k: int) -> float:
    """Direct side of the identity: average over all shifts m mod Q of the
    k-th power of the centered coprime count.  Brute force over m."""
    if math.gcd(q, Q) != 1:
        raise ValueError("vk_direct requires (q, Q) = 1")
    if math.gcd(a, q) != 1:
        raise ValueError("vk_direct requires (a, q) = 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    if Q * (Q + max(1, N // q)) > 5 * 10**9:
        raise ValueError("vk_direct brute-force budget exceeded")
    if k == 0:
        return 1.0
    a = a % q if a % q else q
    r = np.arange(Q, dtype=np.int64)
    coprime = np.gcd(r, Q) == 1
    phiQ = int(coprime.sum())
    vals = np.where(coprime, Q / phiQ - 1.0, -1.0)
    counts = np.bincount(np.arange(a, N + 1, q, dtype=np.int64) % Q,
                         minlength=Q).astype(np.float64)
    total = 0.0
    idx = np.arange(Q)
    for m in range(Q):
        inner = float(vals[(idx + m) % Q] @ counts)
        total += inner**k
    return total / Q


def primorial_coprime(bound: int, q: int) -> int:
    """Product of all primes p <= bound with p coprime to q (a big integer)."""
    out = 1
    for p in primes_upto(bound):
        p = int(p)
        if q % p:
            out *= p
    return out


def v2_exact(Q: int, q: int, a: int, N: int) -> float:
    """V_2(Q;q,a) evaluated exactly through Ramanujan sums.

    Expanding |E_{q,a}(b/r)|^2 over the divisor lattice gives

        V_2 = H (S - 1) + 2 sum_{1<=m<H} (H - m) (T(m) - 1),
        S    = prod_{p|Q} (1 + 1/(p-1)),
        T(m) = prod_{p|Q, p|m} (1 + 1/(p-1)) prod_{p|Q, p!|m} (1 - 1/(p-1)^2),

    valid for any squarefree-divisor lattice of Q with (q, Q) = 1.  This
    path stays computable when Q is a primorial far beyond brute force;
    it is validated against vk_direct on small Q.
    """
    if math.gcd(q, Q) != 1:
        raise ValueError("v2_exact requires (q, Q) = 1")
    a = a % q if a % q else q
    H = class_count(N, q, a)
    if H == 0:
        return 0.0
    primes = [p for p, _ in factorize(Q).pairs]
    S = 1.0
    for p in primes:
        S *= 1.0 + 1.0 / (p - 1)
    total = H * (S - 1.0)
    for m in range(1, H):
        t = 1.0
        for p in primes:
            if m % p == 0:
                t *= 1.0 + 1.0 / (p - 1)
            else:
                t *= 1.0 - 1.0 / (p - 1) ** 2
        total += 2.0 * (H - m) * (t - 1.0)
    return total


def v2_asymptotic(Q: int, q: int, a: int, N: int,
                  profile: ModulusProfile) -> float:
    """Main-term approximation of V_2 for Q divisible by every prime
    p <= (N/q)^2 coprime to q:

        (phi(q)/q) ((phi(q)/q)^{-1} sum_{r|Q} mu^2(r)/phi(r)
                    - log(N/q) + B_q) H.
    """
    if math.gcd(q, Q) != 1:
        raise ValueError("v2_asymptotic requires (q, Q) = 1")
    for p in primes_upto((N * N) // (q * q)):
        p = int(p)
        if q % p and Q % p:
            raise ValueError(
                f"Q is missing prime {p} <= (N/q)^2 required by the "
                "divisibility hypothesis")
    a = a % q if a % q else q
    H = class_count(N, q, a)
    if H == 0:
        return 0.0
    S = 1.0
    for p, _ in factorize(Q).pairs:
        S *= 1.0 + 1.0 / (p - 1)
    ratio = profile.phi_ratio
    return ratio * (S / ratio - math.log(N / q) + profile.B_q) * H


def divisor_phi_sum(Q: int) -> float:
    """sum_{r|Q} mu^2(r)/phi(r), and its Euler product form agree exactly."""
    out = 1.0
    for p, _ in factorize(Q).pairs:
        out *= 1.0 + 1.0 / (p - 1)
    return out


# ---------------------------------------------------------------------------
# sums of (normalized) singular series along a progression


def rk_direct(N: int, q: int, a: int, k: int,
              truncation_prime: int = DEFAULT_TRUNCATION) -> float:
    """Sum of the normalized singular series over distinct k-tuples of
    class members: sum over n_i <= N, n_i = a (mod q), n_i distinct.

    k = 1 sums singleton values (each exactly 0); k = 2 groups ordered
    pairs by their gap mq, which leaves the sum unchanged because the
    series depends only on differences.
    """
    if k not in (1, 2):
        raise ValueError("rk_direct supports k in {1, 2}")
    if (N // q) ** k > 10**8:
        raise ValueError("rk_direct enumeration budget exceeded")
    prof = modulus_profile(q)
    a = a % q if a % q else q
    H = class_count(N, q, a)
    if k == 1:
        total = 0.0
        for n in range(a, N + 1, q):
            total += normalized_singular_series(
                TupleOffsets([n]), prof, truncation_prime,
                waive_multiples=True).value
        return total
    if H < 2:
        return 0.0
    total = 0.0
    for m in range(1, H):
        s0 = normalized_singular_series(
            TupleOffsets([0, m * q]), prof, truncation_prime).value
        total += 2.0 * (H - m) * s0
    return total


def sum_singular_direct(N: int, q: int, a: int, k: int,
                        truncation_prime: int = DEFAULT_TRUNCATION) -> float:
    """Sum of the q-restricted singular series over distinct k-tuples of
    class members (k = 1 or 2), exact up to truncation."""
    if k not in (1, 2):
        raise ValueError("sum_singular_direct supports k in {1, 2}")
    if (N // q) ** k > 10**8:
        raise ValueError("sum_singular_direct enumeration budget exceeded")
    prof = modulus_profile(q)
    a = a % q if a % q else q
    H = class_count(N, q, a)
    if H == 0:
        return 0.0
    if k == 1:
        return H * (q / prof.phi)
    total = 0.0
    for m in range(1, H):
        s = singular_series_q(
            TupleOffsets([0, m * q]), prof, truncation_prime).value
        total += 2.0 * (H - m) * s
    return total
