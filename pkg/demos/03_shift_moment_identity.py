#!/usr/bin/env python3
"""The exactly testable identity behind the moment computations.

V_k(Q;q,a) averages, over all shifts m mod Q, the k-th power of the
centered count of class members coprime to Q.  It equals a sum over the
squarefree divisor lattice of Q of products of class exponential sums
E_{q,a}(b/r).  Both sides are computed independently here; the identity is
exact, so agreement is to floating accumulation error only.
"""

from primeap import vk_direct, vk_fourier

print(f"{'Q':>4} {'q':>3} {'a':>3} {'N':>5} {'k':>2} "
      f"{'direct':>16} {'divisor lattice':>16} {'diff':>9}")
for (Q, q, a, N, k) in [
    (6, 5, 2, 100, 2),
    (10, 7, 1, 50, 2),
    (15, 11, 4, 1000, 3),
    (30, 7, 3, 200, 3),
    (30, 11, 7, 1000, 2),
]:
    d = vk_direct(Q, q, a, N, k)
    f = vk_fourier(Q, q, a, N, k)
    print(f"{Q:>4} {q:>3} {a:>3} {N:>5} {k:>2} {d:>16.10f} {f:>16.10f} "
          f"{abs(d - f):>9.2e}")

print()
print("k = 1 always vanishes (each term is mean-zero over shifts):",
      vk_fourier(30, 7, 2, 200, 1))
