import math

import numpy as np
import pytest

from primeap import ntheory as nt
from primeap import oracle


def test_factorize_examples():
    assert nt.factorize(2023).pairs == ((7, 1), (17, 2))
    assert nt.factorize(1).pairs == ()
    assert nt.factorize(30030).pairs == tuple((p, 1) for p in (2, 3, 5, 7, 11, 13))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        nt.factorize(0)


def test_factorization_invariants_rejected():
    with pytest.raises(ValueError):
        nt.Factorization(12, ((3, 1), (2, 2)))  # unsorted
    with pytest.raises(ValueError):
        nt.Factorization(12, ((2, 2), (5, 1)))  # wrong product


@pytest.mark.parametrize("q,phi", [(2023, 1632), (5749, 5748), (30030, 5760), (2, 1)])
def test_euler_phi_examples(q, phi):
    assert nt.euler_phi(nt.factorize(q)) == phi


def test_mobius_examples():
    assert nt.mobius(1) == 1
    assert nt.mobius(4) == 0
    assert nt.mobius(30) == -1


def test_omega_examples():
    assert nt.omega(nt.factorize(2023)) == 2
    assert nt.omega(nt.factorize(30030)) == 6
    assert nt.omega(nt.factorize(1)) == 0


def _naive_mu(n: int) -> int:
    count = 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
        p += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def test_arithmetic_functions_agree_with_naive_definitions():
    # phi via gcd counting, mu via squarefree test, omega via distinct primes
    for n in range(1, 10**4 + 1):
        f = nt.factorize(n)
        phi_naive = int(np.count_nonzero(np.gcd(np.arange(1, n + 1), n) == 1))
        assert nt.euler_phi(f) == phi_naive
        assert nt.mobius(n) == _naive_mu(n)
        assert nt.omega(f) == sum(1 for _ in f.pairs)


def test_sieve_examples():
    assert nt.sieve_range(2, 10).primes().tolist() == [2, 3, 5, 7]
    assert nt.sieve_range(2, 100).count() == 25


def test_sieve_million_matches_trial_division_fixture():
    # frozen from the trial-division oracle (see primeap/data/fixtures.txt)
    assert nt.sieve_range(2, 10**6).count() == 78498


def test_sieve_rejects_bad_ranges():
    with pytest.raises(ValueError):
        nt.sieve_range(10, 5)
    with pytest.raises(ValueError):
        nt.sieve_range(0, 5)


@pytest.mark.parametrize("segment", [1000, 4096, 77777])
def test_segment_independence(segment):
    limit = 10**6
    single = nt.sieve_range(2, limit).mask
    joined = np.concatenate(
        [seg.mask for seg in nt.iter_prime_segments(limit, segment)])
    assert np.array_equal(single, joined)


def test_segment_independence_ten_million():
    limit = 10**7
    single = nt.sieve_range(2, limit).mask
    joined = np.concatenate(
        [seg.mask for seg in nt.iter_prime_segments(limit, 2**20)])
    assert np.array_equal(single, joined)


def test_prime_range_membership():
    pr = nt.sieve_range(50, 60)
    assert 53 in pr and 59 in pr and 57 not in pr
    with pytest.raises(ValueError):
        61 in pr


def test_ramanujan_examples():
    assert nt.ramanujan_sum(3, 1) == -1
    assert nt.ramanujan_sum(9, 3) == -3
    assert nt.ramanujan_sum(6, 0) == 2  # c_r(0) = phi(r)
    assert nt.ramanujan_sum(1, 5) == 1


def test_ramanujan_multiplicative():
    pairs = [(r, s) for r in range(1, 31) for s in range(1, 31)
             if math.gcd(r, s) == 1]
    for A in range(0, 101, 7):
        for r, s in pairs:
            assert (nt.ramanujan_sum(r * s, A)
                    == nt.ramanujan_sum(r, A) * nt.ramanujan_sum(s, A))


def test_ramanujan_matches_direct_sum_spot():
    for r in (2, 5, 8, 12, 45, 60, 97):
        for A in (0, 1, 3, 8, 30):
            direct = oracle.ramanujan_direct(r, A)
            assert abs(direct.imag) < 1e-9
            assert abs(direct.real - nt.ramanujan_sum(r, A)) < 1e-9


def test_stirling_examples():
    for k in range(1, 9):
        assert nt.stirling2(k, 1) == 1
    assert nt.stirling2(3, 2) == 3
    assert nt.stirling2(4, 2) == 7
    assert nt.stirling2(0, 0) == 1
    assert nt.stirling2(5, 0) == 0
    with pytest.raises(ValueError):
        nt.stirling2(3, 4)


def test_stirling_matches_partition_enumeration():
    for k in range(0, 8):
        for j in range(0, k + 1):
            assert nt.stirling2(k, j) == oracle.partition_count(k, j)


def _falling(x: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= x - i
    return out


@pytest.mark.parametrize("x", [1, 2, 3, 4, 5, 6])
def test_stirling_reconstructs_powers(x):
    for k in range(0, 7):
        total = sum(nt.stirling2(k, j) * _falling(x, j) for j in range(k + 1))
        assert total == x**k


def test_gaussian_moments():
    assert nt.gaussian_moment(0) == 1
    assert nt.gaussian_moment(3) == 0
    assert nt.gaussian_moment(4) == 3
    assert nt.gaussian_moment(6) == 15
    # quadrature oracle, tolerance 1e-6
    assert abs(nt.gaussian_moment(4) - oracle.gaussian_moment_quadrature(4)) < 1e-6
