"""Fixture verification: frozen oracle values against the fast paths.

Every fixture record is recomputed through the *production* implementation
and compared within its stated tolerance, so a pass means the independent
oracle (which generated the file) and the optimized code agree.  On top of
the per-record checks, the full exact-identity grids run here: Ramanujan
sums against literal exponential sums, and both sides of the shift-moment
divisor-lattice identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources

from . import apstats, ntheory
from .oracle import FixtureRecord, load_fixtures, ramanujan_direct
from .singular import (TupleOffsets, modulus_profile,
                       normalized_singular_series, singular_series)

#: the exact-identity grid: every reduced a for each (Q, q), all N and k
VK_GRID_Q = (6, 10, 15, 30)
VK_GRID_MODULI = (7, 11)
VK_GRID_N = (50, 200, 1000)
VK_GRID_K = (0, 1, 2, 3)
VK_TOLERANCE = 1e-8

RAMANUJAN_LIMIT = 200


@dataclass
class Mismatch:
    name: str
    inputs: tuple
    expected: float
    got: float
    tolerance: float

    def describe(self) -> str:
        return (f"mismatch: {self.name} inputs={list(self.inputs)} "
                f"expected={self.expected!r} got={self.got!r} "
                f"tolerance={self.tolerance!r}")


@dataclass
class VerifyReport:
    sections: dict[str, int] = field(default_factory=dict)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def default_fixture_path():
    return resources.files("primeap.data") / "fixtures.txt"


def production_value(rec: FixtureRecord) -> float:
    """Recompute a fixture through the production implementation."""
    name, inp = rec.name, rec.inputs
    if name == "trial_division_pi":
        return ntheory.sieve_range(2, int(inp[0])).count()
    if name == "ramanujan_direct":
        return ntheory.ramanujan_sum(int(inp[0]), int(inp[1]))
    if name == "partition_count":
        return ntheory.stirling2(int(inp[0]), int(inp[1]))
    if name == "gaussian_moment":
        return ntheory.gaussian_moment(int(inp[0]))
    if name == "pair_count":
        return apstats.pair_count(int(inp[0]), int(inp[1]))
    if name == "pi_in_class":
        x, q, a = (int(v) for v in inp)
        table = apstats.ap_counts(x, q)
        idx = int(list(table.residues).index(a))
        return int(table.pi[idx])
    if name == "vk_direct":
        Q, q, a, N, k = (int(v) for v in inp)
        return apstats.vk_direct(Q, q, a, N, k)
    if name == "singular_series":
        offsets, P = inp
        return singular_series(TupleOffsets(offsets), int(P)).value
    if name == "normalized_singular_series":
        offsets, q, P = inp
        return normalized_singular_series(
            TupleOffsets(offsets), modulus_profile(int(q)), int(P)).value
    raise ValueError(f"unknown fixture operation {name!r}")


def check_fixtures(path=None) -> tuple[int, list[Mismatch]]:
    path = path or default_fixture_path()
    records = load_fixtures(path)
    mismatches = []
    for rec in records:
        got = production_value(rec)
        if rec.tolerance == 0:
            ok = int(got) == rec.value
        else:
            ok = abs(got - rec.value) <= rec.tolerance
        if not ok:
            mismatches.append(
                Mismatch(rec.name, rec.inputs, rec.value, got, rec.tolerance))
    return len(records), mismatches


def check_ramanujan_grid(limit: int = RAMANUJAN_LIMIT) -> tuple[int, list[Mismatch]]:
    """Formula vs literal exponential sum, exact integers, r, A <= limit."""
    mismatches = []
    checked = 0
    for r in range(1, limit + 1):
        for A in range(0, limit + 1):
            formula = ntheory.ramanujan_sum(r, A)
            direct = ramanujan_direct(r, A)
            checked += 1
            if abs(direct.imag) > 1e-9 or abs(direct.real - formula) > 1e-9:
                mismatches.append(
                    Mismatch("ramanujan_sum", (r, A), direct.real,
                             formula, 1e-9))
    return checked, mismatches


def check_vk_grid() -> tuple[int, list[Mismatch]]:
    """Both sides of the shift-moment identity over the full grid."""
    mismatches = []
    checked = 0
    for Q in VK_GRID_Q:
        for q in VK_GRID_MODULI:
            for a in range(1, q):
                if math.gcd(a, q) != 1:
                    continue
                for N in VK_GRID_N:
                    for k in VK_GRID_K:
                        direct = apstats.vk_direct(Q, q, a, N, k)
                        fourier = apstats.vk_fourier(Q, q, a, N, k)
                        checked += 1
                        if abs(direct - fourier) > VK_TOLERANCE * max(1.0, abs(direct)):
                            mismatches.append(Mismatch(
                                "vk_identity", (Q, q, a, N, k), direct,
                                fourier, VK_TOLERANCE))
    return checked, mismatches


def run_verification(fixture_path=None) -> VerifyReport:
    report = VerifyReport()
    n, bad = check_fixtures(fixture_path)
    report.sections["fixtures"] = n
    report.mismatches += bad
    n, bad = check_ramanujan_grid()
    report.sections["ramanujan_grid"] = n
    report.mismatches += bad
    n, bad = check_vk_grid()
    report.sections["vk_identity_grid"] = n
    report.mismatches += bad
    return report
