#!/usr/bin/env python3
"""Singular series with certified truncation error.

Three related Euler products: the classical prime-tuple series S(D), its
q-restricted version S(D;q) (local factors at p | q stripped), and the
mean-zero normalization S0(D;q) obtained by subset inclusion-exclusion.
Every value comes back with an interval certified by a tail bound.
"""

from primeap import (TupleOffsets, modulus_profile,
                     normalized_singular_series, singular_series,
                     singular_series_q)

# The twin-tuple value: S({0,2}) = 2 * C_2 (twin prime constant)
for P in (10**4, 10**5, 10**6):
    tv = singular_series(TupleOffsets([0, 2]), truncation_prime=P)
    lo, hi = tv.interval()
    print(f"S({{0,2}}) at P={P:>7}: {tv.value:.10f} in [{lo:.10f}, {hi:.10f}]")
print("known 2*C2       : 1.3203236316932803...\n")

# A vanishing local factor makes the value exactly zero
print("S({0,1}) =", singular_series(TupleOffsets([0, 1])).value,
      "(consecutive integers: the p=2 factor vanishes)\n")

# Restriction identity: for offsets that are multiples of q,
# S(D;q) = (q/phi(q)) S(D)
q = 30
prof = modulus_profile(q)
D = TupleOffsets([0, q, 3 * q])
lhs = singular_series_q(D, prof)
rhs = (q / prof.phi) * singular_series(D).value
print(f"S(D;{q})          = {lhs.value:.10f}")
print(f"(q/phi) * S(D)   = {rhs:.10f}   (identity, exact up to truncation)\n")

# The normalized series of a singleton vanishes; pairs measure correlation
prof6 = modulus_profile(6)
single = normalized_singular_series(TupleOffsets([6]), prof6)
pair = normalized_singular_series(TupleOffsets([0, 6]), prof6)
print("S0({6}; 6)   =", single.value, "(singletons always cancel)")
print(f"S0({{0,6}}; 6) = {pair.value:.8f} (negative: same-class repulsion)")
