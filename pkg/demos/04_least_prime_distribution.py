#!/usr/bin/env python3
"""Least primes p(q,a) in units of phi(q) log q: the exponential law and
the smooth-modulus discrepancy.

For prime q the empirical CDF of p(q,a)/(phi(q) log q) tracks 1 - e^{-t}
closely.  For the primorial modulus 30030 it runs far ahead, and a
piecewise-linear prediction whose slope drops by S({0,q})/log q at every
multiple of tau = q/(phi log q) captures most of the miss.
"""

import numpy as np

from primeap import (ModifiedPrediction, least_primes, modulus_profile,
                     sup_distance)
from primeap.distributions import (comparison_grid, empirical_curve,
                                   exponential_curve, least_prime_values,
                                   modified_curve)

for q in (5749, 30030):
    prof = modulus_profile(q)
    values = least_prime_values(least_primes(q), prof)
    grid = comparison_grid(prof)
    emp = empirical_curve(values, grid)
    d_exp = sup_distance(emp, exponential_curve(grid))
    d_mod = sup_distance(emp, modified_curve(prof, grid))
    print(f"q = {q}: mean t = {values.mean():.4f}, "
          f"sup|ECDF - exponential| = {d_exp:.4f}, "
          f"sup|ECDF - modified| = {d_mod:.4f}")

print("\n(the modified curve is built for smooth q: at the prime modulus the")
print(" plain exponential already wins, at 30030 the correction halves the gap)")

prof = modulus_profile(30030)
pred = ModifiedPrediction(prof)
print(f"\nmodified prediction for q=30030 (tau = {prof.tau:.5f}):")
print("  segment slopes:", np.round(pred.slopes[:4], 4))
print("  (first slope 1 + 1/log q; the drop at tau is S({0,q})/log q =",
      f"{pred.pair_constant(1) / np.log(30030):.4f})")

# a terminal sketch of empirical vs the two predictions at the bin edges
values = least_prime_values(least_primes(30030), prof)
grid = np.arange(0.0, 3.01, 0.25)
emp = empirical_curve(values, grid)
print("\n   t    ECDF   exponential  modified")
for t, e in zip(grid, emp.Fs):
    bar = "#" * int(round(40 * e))
    print(f"{t:5.2f}  {e:.4f}  {1 - np.exp(-t):.4f}       "
          f"{float(pred(t)):.4f}  {bar}")
