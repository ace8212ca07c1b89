"""Residue facts about the counts sp(n, m), swept over finite ranges.

Every checker replays one family of congruences through the recurrence
and returns a CongruenceReport; nothing here is proved, only verified
instance by instance.

  * oddness: sp(n, m) is odd for every n >= 0.
  * mod 4, base case m = 2: sp(2n + 1, 2) = 2n + 1 (mod 4).
  * mod 4, general m: sp(2mj + 1, m) = 1 and sp(2mj + m + 1, m) = 3
    (mod 4) for every j >= 0.
  * mod 3, for m >= 4 with m = 1 (mod 3): sp(m^2 j + m + r, m) = 0
    (mod 3) for every j >= 0 and 1 <= r < m.
  * partial sums, same moduli: sp(1, m) + ... + sp(mj + 1, m) = 1
    (mod 3) for every j >= 0.
  * two-size parity, m = 2: for odd n, the number of partitions of n
    into powers of 2 with every part size used an odd number of times
    and exactly two distinct sizes is even when n = 1 (mod 4) and odd
    when n = 3 (mod 4).  The counter is an independent exhaustive
    search over the size pairs.
  * special cases: seven fixed-modulus instances of the mod 4 and
    mod 3 families, replayed together.
"""

from __future__ import annotations

from .core import check_modulus
from .recurrence import CountCache, sp
from .report import CongruenceReport


def _check_bound(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def check_oddness(n_max: int, m: int) -> CongruenceReport:
    """sp(n, m) mod 2 == 1 for 0 <= n <= n_max."""
    _check_bound(n_max, "n_max")
    check_modulus(m)
    report = CongruenceReport("oddness", {"m": m, "n_max": n_max})
    cache = CountCache(m)
    for n in range(n_max + 1):
        report.record(f"n={n}", sp(n, m, cache) % 2, 1)
    return report


def check_mod4_base(n_max: int) -> CongruenceReport:
    """sp(2n + 1, 2) mod 4 == (2n + 1) mod 4 for 0 <= n <= n_max."""
    _check_bound(n_max, "n_max")
    report = CongruenceReport("mod4", {"m": 2, "n_max": n_max})
    cache = CountCache(2)
    for n in range(n_max + 1):
        arg = 2 * n + 1
        report.record(f"n={arg}", sp(arg, 2, cache) % 4, arg % 4)
    return report


def check_mod4_general(m: int, j_max: int) -> CongruenceReport:
    """sp(2mj + 1, m) == 1 and sp(2mj + m + 1, m) == 3 mod 4, j <= j_max."""
    check_modulus(m)
    _check_bound(j_max, "j_max")
    report = CongruenceReport("mod4-general", {"m": m, "j_max": j_max})
    cache = CountCache(m)
    for j in range(j_max + 1):
        report.record(f"j={j},n={2 * m * j + 1}", sp(2 * m * j + 1, m, cache) % 4, 1)
        report.record(f"j={j},n={2 * m * j + m + 1}", sp(2 * m * j + m + 1, m, cache) % 4, 3)
    return report


def _check_mod3_modulus(m: int) -> None:
    check_modulus(m)
    if m < 4 or m % 3 != 1:
        raise ValueError(f"modulus must be >= 4 and congruent to 1 mod 3, got {m}")


def check_mod3(m: int, j_max: int) -> CongruenceReport:
    """sp(m^2 j + m + r, m) divisible by 3 for j <= j_max, 1 <= r < m."""
    _check_mod3_modulus(m)
    _check_bound(j_max, "j_max")
    report = CongruenceReport("mod3", {"m": m, "j_max": j_max})
    cache = CountCache(m)
    for j in range(j_max + 1):
        for r in range(1, m):
            arg = m * m * j + m + r
            report.record(f"j={j},r={r}", sp(arg, m, cache) % 3, 0)
    return report


def check_partial_sum_mod3(m: int, j_max: int) -> CongruenceReport:
    """Partial sums sp(1) + ... + sp(mj + 1) == 1 mod 3, j <= j_max."""
    _check_mod3_modulus(m)
    _check_bound(j_max, "j_max")
    report = CongruenceReport("partial-sum", {"m": m, "j_max": j_max})
    cache = CountCache(m)
    total = 0
    upto = 0
    for j in range(j_max + 1):
        while upto < m * j + 1:
            upto += 1
            total += sp(upto, m, cache)
        report.record(f"j={j}", total % 3, 1)
    return report


def count_two_size_odd_partitions(n: int) -> int:
    """Partitions of n into powers of 2, each size used an odd number of
    times, with exactly two distinct sizes.

    Plain search over size pairs 2^a < 2^b and odd multiplicities; this
    deliberately shares no code with the run-form machinery.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"argument must be a positive integer, got {n!r}")
    powers = []
    p = 1
    while p <= n:
        powers.append(p)
        p *= 2
    count = 0
    for bi in range(1, len(powers)):
        big = powers[bi]
        for ai in range(bi):
            small = powers[ai]
            v = 1
            while v * big + small <= n:
                remainder = n - v * big
                if remainder % small == 0 and (remainder // small) % 2 == 1:
                    count += 1
                v += 2
    return count


def check_ob_parity(n_max: int) -> CongruenceReport:
    """Two-size partition counts have parity (n mod 4 - 1) / 2, odd n <= n_max."""
    _check_bound(n_max, "n_max")
    report = CongruenceReport("ob-parity", {"n_max": n_max})
    for n in range(1, n_max + 1, 2):
        expected = (n % 4 - 1) // 2
        report.record(f"n={n}", count_two_size_odd_partitions(n) % 2, expected)
    return report


# label, modulus, stride, offset, residue modulus, expected residue
SPECIAL_CASES = (
    ("1a", 3, 6, 1, 4, 1),
    ("1b", 3, 6, 4, 4, 3),
    ("2a", 4, 8, 1, 4, 1),
    ("2b", 4, 8, 5, 4, 3),
    ("1", 4, 16, 5, 3, 0),
    ("2", 7, 49, 8, 3, 0),
    ("3", 10, 100, 11, 3, 0),
)


def check_special_cases(j_max: int = 200) -> CongruenceReport:
    """Replay the seven fixed special-case families for 0 <= j <= j_max.

    Four are mod 4 statements (moduli 3 and 4) and three are mod 3
    statements (moduli 4, 7 and 10); each is the specialisation of a
    general family to one stride and offset.
    """
    _check_bound(j_max, "j_max")
    report = CongruenceReport("special-cases", {"j_max": j_max})
    caches = {}
    for label, m, stride, offset, modulus, expected in SPECIAL_CASES:
        cache = caches.setdefault(m, CountCache(m))
        for j in range(j_max + 1):
            arg = stride * j + offset
            report.record(f"({label}) j={j}", sp(arg, m, cache) % modulus, expected)
    return report
