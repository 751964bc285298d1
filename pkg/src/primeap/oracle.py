"""Independent brute-force oracles used to generate and check fixtures.

Everything in this module favors obviousness over speed and shares no
arithmetic helpers with the production modules: only the standard library
is used, and every quantity is computed from its definition (trial
division, literal exponential sums, explicit set-partition enumeration,
direct double loops).  Oracle values are frozen into a plain-text fixture
file; the fast paths are then required to reproduce them.

Fixture file format (one record per line, tab-separated):

    name <TAB> inputs-as-JSON <TAB> value <TAB> tolerance <TAB> note

Integer values are stored exactly; real values are stored via repr() and
compared within the stated tolerance.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from pathlib import Path


# ---------------------------------------------------------------------------
# primality / prime counting


def is_prime_trial(n: int) -> bool:
    """Trial division, the most obvious primality check there is."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def trial_division_pi(x: int) -> int:
    """Exact prime count pi(x) by trial division.  Budget: x <= 10^7."""
    if x > 10**7:
        raise ValueError("trial_division_pi budget is x <= 10^7")
    return sum(1 for n in range(2, x + 1) if is_prime_trial(n))


def primes_in_class_upto(x: int, q: int, a: int) -> list[int]:
    """All primes p <= x with p = a (mod q), by trial division."""
    return [p for p in range(2, x + 1) if p % q == a % q and is_prime_trial(p)]


def prime_pairs_upto(x: int, q: int) -> int:
    """Count p <= x with p and p+q both prime, by trial division."""
    return sum(1 for p in range(2, x + 1)
               if is_prime_trial(p) and is_prime_trial(p + q))


# ---------------------------------------------------------------------------
# exponential sums


def ramanujan_direct(r: int, A: int) -> complex:
    """Literal reduced-residue exponential sum sum_{(b,r)=1} e(Ab/r).

    Budget: r <= 10^4.  The imaginary part of the result must vanish;
    callers assert |Im| < 1e-9.
    """
    if r > 10**4:
        raise ValueError("ramanujan_direct budget is r <= 10^4")
    total = 0j
    for b in range(1, r + 1):
        if math.gcd(b, r) == 1:
            total += cmath.exp(2j * cmath.pi * A * b / r)
    if r == 1:
        total = 1 + 0j  # single term b=1, e(A) = 1
    return total


def exp_sum_direct(b: int, r: int, q: int, a: int, N: int) -> complex:
    """Term-by-term sum of e(nb/r) over n <= N, n = a (mod q)."""
    total = 0j
    for n in range(a, N + 1, q):
        total += cmath.exp(2j * cmath.pi * b * n / r)
    return total


def vk_bruteforce(Q: int, q: int, a: int, N: int, k: int) -> float:
    """Direct double loop for the k-th moment over shifts m mod Q of the
    centered count of class members coprime to Q.

    No algebraic shortcuts: for every shift m the inner sum is formed
    term by term.  Budget: Q * N/q <= 10^8.
    """
    if Q * max(1, N // q) > 10**8:
        raise ValueError("vk_bruteforce work budget exceeded")
    phiQ = sum(1 for b in range(1, Q + 1) if math.gcd(b, Q) == 1)
    ratio = Q / phiQ
    total = 0.0
    for m in range(Q):
        inner = 0.0
        n = a
        while n <= N:
            if math.gcd(n + m, Q) == 1:
                inner += ratio - 1.0
            else:
                inner -= 1.0
            n += q
        total += inner**k
    return total / Q


# ---------------------------------------------------------------------------
# combinatorics


def _set_partitions(items: list[int]):
    """Yield all partitions of items as lists of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in _set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [first]] + partial[i + 1:]
        yield partial + [[first]]


def partition_count(k: int, j: int) -> int:
    """Number of partitions of a k-set into j non-empty blocks, by
    explicit enumeration.  Budget: k <= 10."""
    if k > 10:
        raise ValueError("partition_count budget is k <= 10")
    if k == 0:
        return 1 if j == 0 else 0
    return sum(1 for p in _set_partitions(list(range(k))) if len(p) == j)


def gaussian_moment_quadrature(K: int) -> float:
    """K-th moment of a standard Gaussian by Simpson quadrature on
    [-12, 12] (the tail beyond is < 1e-30)."""
    n = 24000  # even
    h = 24.0 / n
    total = 0.0
    for i in range(n + 1):
        x = -12.0 + i * h
        w = 1 if i in (0, n) else (4 if i % 2 else 2)
        total += w * x**K * math.exp(-x * x / 2.0)
    return total * h / 3.0 / math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# fixture records


@dataclass(frozen=True)
class FixtureRecord:
    """One frozen oracle value: operation, canonical inputs, value, tolerance.

    tolerance == 0 means the value is an exact integer and must match
    bit for bit; otherwise |got - value| <= tolerance is required.
    """

    name: str
    inputs: tuple
    value: float | int
    tolerance: float
    note: str = ""

    def format(self) -> str:
        val = repr(self.value)
        return "\t".join(
            [self.name, json.dumps(list(self.inputs)), val,
             repr(self.tolerance), self.note])


def parse_fixture_line(line: str, lineno: int = 0) -> FixtureRecord:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != 5:
        raise ValueError(f"malformed fixture record at line {lineno}: {line!r}")
    name, inputs_json, value_s, tol_s, note = parts
    inputs = tuple(json.loads(inputs_json))
    tol = float(tol_s)
    value = int(value_s) if tol == 0 else float(value_s)
    return FixtureRecord(name, inputs, value, tol, note)


def load_fixtures(path: str | Path) -> list[FixtureRecord]:
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for i, line in enumerate(fh, 1):
            if not line.strip() or line.startswith("#"):
                continue
            records.append(parse_fixture_line(line, i))
    return records


def write_fixtures(records: list[FixtureRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# oracle fixtures: name\tinputs\tvalue\ttolerance\tnote\n")
        for rec in records:
            fh.write(rec.format() + "\n")


def generate_fixtures() -> list[FixtureRecord]:
    """Regenerate every shipped fixture from this module's oracles.

    Slow by design (minutes): trial division up to 10^6 dominates.
    """
    recs = [
        FixtureRecord("trial_division_pi", (100,), trial_division_pi(100), 0.0,
                      "prime count by trial division"),
        FixtureRecord("trial_division_pi", (10**6,), trial_division_pi(10**6), 0.0,
                      "prime count by trial division"),
        FixtureRecord("ramanujan_direct", (3, 1),
                      round(ramanujan_direct(3, 1).real), 0.0,
                      "direct reduced-residue exponential sum"),
        FixtureRecord("ramanujan_direct", (9, 3),
                      round(ramanujan_direct(9, 3).real), 0.0,
                      "direct reduced-residue exponential sum"),
        FixtureRecord("ramanujan_direct", (6, 0),
                      round(ramanujan_direct(6, 0).real), 0.0,
                      "c_r(0) equals phi(r)"),
        FixtureRecord("partition_count", (3, 2), partition_count(3, 2), 0.0,
                      "set partitions into 2 blocks"),
        FixtureRecord("partition_count", (4, 2), partition_count(4, 2), 0.0,
                      "set partitions into 2 blocks"),
        FixtureRecord("gaussian_moment", (4,), gaussian_moment_quadrature(4),
                      1e-6, "Simpson quadrature of x^4 against the normal density"),
        FixtureRecord("pair_count", (10, 2), prime_pairs_upto(10, 2), 0.0,
                      "twin pairs by trial division"),
        FixtureRecord("pair_count", (100, 6), prime_pairs_upto(100, 6), 0.0,
                      "gap-6 pairs by trial division"),
        FixtureRecord("pi_in_class", (100, 4, 1),
                      len(primes_in_class_upto(100, 4, 1)), 0.0,
                      "primes = 1 mod 4 by trial division"),
        FixtureRecord("vk_direct", (6, 5, 2, 100, 2),
                      vk_bruteforce(6, 5, 2, 100, 2), 1e-10,
                      "direct double loop over shifts"),
        FixtureRecord("vk_direct", (30, 7, 3, 200, 3),
                      vk_bruteforce(30, 7, 3, 200, 3), 1e-10,
                      "direct double loop over shifts"),
    ]
    return recs


if __name__ == "__main__":  # pragma: no cover
    import sys

    out = sys.argv[1] if len(sys.argv) > 1 else "fixtures.txt"
    write_fixtures(generate_fixtures(), out)
    print(f"wrote {out}")
