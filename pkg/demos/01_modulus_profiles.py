#!/usr/bin/env python3
"""Tour of the modulus constants driving everything else.

For each modulus the profile carries the factorization, phi, and the
constants B_q, A_q, sigma_q^2 plus the least-prime transition width
tau = q/(phi(q) log q).  The three study moduli: 2023 = 7 * 17^2 (generic),
5749 (prime), 30030 = 2*3*5*7*11*13 (primorial-smooth, where tau is huge).
"""

import math

from primeap import modulus_profile

for q in (2023, 5749, 30030, 999983):
    prof = modulus_profile(q)
    fact = " * ".join(f"{p}^{e}" if e > 1 else str(p)
                      for p, e in prof.factorization.pairs)
    print(f"q = {q} = {fact}")
    print(f"  phi = {prof.phi}   omega = {prof.omega}")
    print(f"  B_q = {prof.B_q:+.6f}   A_q = {prof.A_q:+.6f}")
    print(f"  sigma_q^2 = {prof.sigma_q_sq:.6f} "
          f"(= log q + B_q - 1: {math.log(q) + prof.B_q - 1:.6f})")
    print(f"  tau = q/(phi log q) = {prof.tau:.5f}")
    print()

print("The smooth modulus has tau ~ 0.51, five times the histogram bin")
print("width, which is why its least-prime CDF visibly kinks (see demo 04).")
