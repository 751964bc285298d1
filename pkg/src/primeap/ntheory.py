"""Exact integer arithmetic and deterministic prime enumeration.

Primality is decided by sieving only — no probabilistic tests — so every
count downstream is exact.  The segmented sieve is bit-identical to a
single-pass sieve regardless of how the range is split, which the test
suite asserts directly.

Conventions:
    phi         Euler totient, from the factorization
    mu          Mobius function (0 on non-squarefree)
    omega       number of distinct prime factors
    c_r(A)      Ramanujan sum; c_r(0) = phi(r) (the value forced by the
                identity sum_{(b,r)=1} e(0) = phi(r))
    S(k,j)      Stirling numbers of the second kind
    mu_K        Gaussian moments: (K-1)!! for even K, 0 for odd K
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

#: Euler-Mascheroni constant and log(2*pi), frozen to 20 significant digits
#: so derived constants cannot drift across platforms.
EULER_GAMMA = 0.57721566490153286061
LOG_TWO_PI = 1.8378770664093454836

#: Default segment size for sieving (integers per segment).
DEFAULT_SEGMENT = 1 << 22


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p1,e1),(p2,e2),...), primes ascending."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.pairs:
            if p <= last or e < 1:
                raise ValueError("factorization pairs must be sorted with e >= 1")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError("factorization does not multiply back to n")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division (fine for desk-scale moduli)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    pairs = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    f = 5
    while f * f <= m:
        for p in (f, f + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                pairs.append((p, e))
        f += 6
    if m > 1:
        pairs.append((m, 1))
    return Factorization(n, tuple(sorted(pairs)))


def euler_phi(f: Factorization) -> int:
    """phi(n) = prod p^(e-1) (p-1)."""
    out = 1
    for p, e in f.pairs:
        out *= p ** (e - 1) * (p - 1)
    return out


def omega(f: Factorization) -> int:
    """Number of distinct prime factors."""
    return len(f.pairs)


def mobius(n: int) -> int:
    """mu(n): 0 unless n is squarefree, else (-1)^omega(n)."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    f = factorize(n)
    if any(e > 1 for _, e in f.pairs):
        return 0
    return -1 if omega(f) % 2 else 1


def ramanujan_sum(r: int, A: int) -> int:
    """c_r(A) = mu(r/(A,r)) * phi(r) / phi(r/(A,r)); c_r(0) = phi(r)."""
    if r < 1:
        raise ValueError("ramanujan_sum requires r >= 1")
    g = math.gcd(A % r, r) if r > 1 else 1
    if r == 1:
        return 1
    if A % r == 0:
        return euler_phi(factorize(r))
    d = r // g
    mu_d = mobius(d)
    if mu_d == 0:
        return 0
    phi_r = euler_phi(factorize(r))
    phi_d = euler_phi(factorize(d))
    return mu_d * phi_r // phi_d


@lru_cache(maxsize=64)
def _stirling_rows(kmax: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]  # S(0,0) = 1
    for k in range(1, kmax + 1):
        prev = rows[-1]
        row = [0] * (k + 1)
        for j in range(1, k + 1):
            above = prev[j] if j < len(prev) else 0
            row[j] = j * above + prev[j - 1]
        rows.append(tuple(row))
    return tuple(rows)


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind via S(k,j) = j*S(k-1,j)+S(k-1,j-1)."""
    if k < 0 or j < 0:
        raise ValueError("stirling2 requires k, j >= 0")
    if j > k:
        raise ValueError("stirling2 requires j <= k")
    return _stirling_rows(k)[k][j]


def gaussian_moment(K: int) -> int:
    """K-th moment of a standard Gaussian: (K-1)!! for even K, 0 for odd."""
    if K < 0:
        raise ValueError("gaussian_moment requires K >= 0")
    if K % 2:
        return 0
    out = 1
    for m in range(K - 1, 1, -2):
        out *= m
    return out


# ---------------------------------------------------------------------------
# sieving


@dataclass(frozen=True)
class PrimeRange:
    """Primality bitset over [lo, hi] (inclusive), deterministic."""

    lo: int
    hi: int
    mask: np.ndarray  # bool, length hi - lo + 1

    def __contains__(self, n: int) -> bool:
        if n < self.lo or n > self.hi:
            raise ValueError(f"{n} outside [{self.lo}, {self.hi}]")
        return bool(self.mask[n - self.lo])

    def primes(self) -> np.ndarray:
        """All primes in the range, ascending, as int64."""
        return (np.flatnonzero(self.mask) + self.lo).astype(np.int64)

    def count(self) -> int:
        return int(self.mask.sum())


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    """Primes up to limit by a plain sieve (used to seed segments)."""
    if limit < 2:
        return ()
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p:: p] = False
    return tuple(int(p) for p in np.flatnonzero(is_p))


def sieve_range(lo: int, hi: int) -> PrimeRange:
    """Deterministic sieve of [lo, hi].  Requires 2 <= lo <= hi."""
    if hi < lo:
        raise ValueError("sieve_range requires lo <= hi")
    if lo < 2:
        raise ValueError("sieve_range requires lo >= 2")
    mask = np.ones(hi - lo + 1, dtype=bool)
    for p in _base_primes(math.isqrt(hi)):
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start > hi:
            continue
        mask[start - lo:: p] = False
    return PrimeRange(lo, hi, mask)


def iter_prime_segments(limit: int, segment: int = DEFAULT_SEGMENT):
    """Yield PrimeRange segments covering [2, limit] in ascending order.

    Concatenated segments are bit-identical to one sieve_range(2, limit)
    pass for any segment size; segment only affects memory and speed.
    """
    if limit < 2:
        return
    lo = 2
    while lo <= limit:
        hi = min(lo + segment - 1, limit)
        yield sieve_range(lo, hi)
        lo = hi + 1


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    return sieve_range(2, limit).primes()
