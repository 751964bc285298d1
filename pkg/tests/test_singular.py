import math

import pytest

from primeap import singular as sg
from primeap.singular import TupleOffsets

TWIN_FIXTURE = 1.3203237211802865  # frozen, P = 1e6 (fixtures.txt)
NORMALIZED_PAIR_FIXTURE = -1.07805767291811  # S0({0,6}; 6), P = 1e6


def test_tuple_offsets_sorted_and_distinct():
    assert TupleOffsets([6, 0]).offsets == (0, 6)
    with pytest.raises(ValueError):
        TupleOffsets([1, 1])
    with pytest.raises(ValueError):
        TupleOffsets([-1, 2])


def test_residue_count_examples():
    assert sg.residue_count(TupleOffsets([0, 2]), 2) == 1
    assert sg.residue_count(TupleOffsets([0, 2]), 3) == 2
    assert sg.residue_count(TupleOffsets([0, 6, 12]), 5) == 3
    with pytest.raises(ValueError):
        sg.residue_count(TupleOffsets([]), 3)


def test_singleton_and_empty_are_exact():
    one = sg.singular_series(TupleOffsets([0]))
    assert one.value == 1.0 and one.tail_bound == 0.0
    empty = sg.singular_series(TupleOffsets([]))
    assert empty.value == 1.0


def test_vanishing_pair_is_exact_zero():
    z = sg.singular_series(TupleOffsets([0, 1]))
    assert z.value == 0.0 and z.tail_bound == 0.0


def test_twin_constant_dual_truncation():
    lo = sg.singular_series(TupleOffsets([0, 2]), 10**5)
    hi = sg.singular_series(TupleOffsets([0, 2]), 10**6)
    assert lo.overlaps(hi)
    assert abs(hi.value - TWIN_FIXTURE) <= 1e-9


@pytest.mark.parametrize("offsets", [(0, 2), (0, 6, 12), (0, 4, 6, 10)])
def test_truncation_monotonicity(offsets):
    prev = None
    for P in (10**3, 10**4, 10**5, 10**6):
        cur = sg.singular_series(TupleOffsets(offsets), P)
        if prev is not None:
            lo, hi = prev.interval()
            assert lo - 1e-12 <= cur.value <= hi + 1e-12
        prev = cur


def test_truncation_prime_too_small_rejected():
    with pytest.raises(ValueError):
        sg.singular_series(TupleOffsets([0, 100]), 50)


def test_permutation_invariance():
    a = sg.singular_series(TupleOffsets([0, 6, 12]))
    b = sg.singular_series(TupleOffsets([12, 0, 6]))
    assert a.value == b.value


def test_restricted_singleton_and_empty():
    prof = sg.modulus_profile(6)
    assert sg.singular_series_q(TupleOffsets([]), prof).value == 1.0
    single = sg.singular_series_q(TupleOffsets([6]), prof)
    assert single.value == pytest.approx(3.0, abs=0)  # q/phi(q) exactly


def test_restricted_rejects_non_multiples_unless_waived():
    prof = sg.modulus_profile(6)
    with pytest.raises(ValueError):
        sg.singular_series_q(TupleOffsets([0, 5]), prof)
    waived = sg.singular_series_q(TupleOffsets([0, 5]), prof,
                                  waive_multiples=True)
    assert waived.value > 0


def test_restriction_identity_documented_grid():
    # S(D;q) = (q/phi) S(D) for tuples of multiples of q, within bounds
    for q in (6, 30, 2023):
        prof = sg.modulus_profile(q)
        ratio = q / prof.phi
        for mults in ([1], [2], [1, 2], [3, 7], [2, 20], [1, 2, 3]):
            D = TupleOffsets([0] + [m * q for m in mults])
            lhs = sg.singular_series_q(D, prof)
            plain = sg.singular_series(D)
            rhs = sg.TruncatedValue(ratio * plain.value, plain.tail_bound,
                                    plain.truncation_prime)
            assert lhs.overlaps(rhs), (q, mults, lhs.value, rhs.value)


def test_vanishing_detection_in_restricted_series():
    # v_2({0,1,2} mod 2) = 2 = p forces an exact zero for any q odd
    prof = sg.modulus_profile(7)
    z = sg.singular_series_q(TupleOffsets([0, 1, 2]), prof,
                             waive_multiples=True)
    assert z.value == 0.0 and z.tail_bound == 0.0


def test_normalized_empty_and_singleton():
    prof = sg.modulus_profile(6)
    assert sg.normalized_singular_series(TupleOffsets([]), prof).value == 1.0
    single = sg.normalized_singular_series(TupleOffsets([12]), prof)
    assert abs(single.value) <= single.absolute_error()


def test_normalized_pair_dual_path():
    prof = sg.modulus_profile(6)
    via_subsets = sg.normalized_singular_series(TupleOffsets([0, 6]), prof)
    # direct k=2 expansion: S({0,6};6) - (q/phi)^2
    direct = sg.singular_series_q(TupleOffsets([0, 6]), prof).value - 3.0**2
    assert via_subsets.value == pytest.approx(direct, abs=1e-12)
    assert abs(via_subsets.value - NORMALIZED_PAIR_FIXTURE) <= 1e-9


def test_normalized_k_cap():
    prof = sg.modulus_profile(6)
    offsets = TupleOffsets([6 * i for i in range(13)])
    with pytest.raises(ValueError):
        sg.normalized_singular_series(offsets, prof)


def test_modulus_profile_constants():
    prof = sg.modulus_profile(30030)
    assert abs(prof.tau - 0.50568) <= 5e-4
    assert prof.phi == 5760 and prof.omega == 6
    # B_2 = 1 - gamma - log(2 pi) - log 2, frozen
    assert sg.modulus_profile(2).B_q == pytest.approx(-2.1082399118708246,
                                                      abs=1e-12)


@pytest.mark.parametrize("q", [2, 6, 101, 2023, 5749, 30030, 999983])
def test_sigma_sq_identity(q):
    prof = sg.modulus_profile(q)
    direct = (math.log(q / (2 * math.pi)) - sg.EULER_GAMMA
              - sum(math.log(p) / (p - 1) for p in prof.factorization.primes))
    assert abs(prof.sigma_q_sq - direct) <= 1e-12
    assert abs(prof.sigma_q_sq - (math.log(q) + prof.B_q - 1)) <= 1e-12


def test_modulus_profile_rejects_tiny():
    with pytest.raises(ValueError):
        sg.modulus_profile(1)
