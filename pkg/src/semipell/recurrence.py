"""Counting semi-m-Pell compositions.

Write sp(n, m) for the number of semi-m-Pell compositions of n.  The
count obeys a three-way recurrence: sp(0, m) = 1 (the empty
composition), sp(n, m) = 1 for 1 <= n <= m - 1, and for n >= m

    sp(n, m) = sp(n // m, m)                     if m divides n,
    sp(n, m) = 2 sp(n - r, m) + sp(n - m, m)     if n = r (mod m), 0 < r < m.

The two-term branch mirrors the construction: a residue part r can be
glued to the front or the back of a composition of n - r (all of whose
parts are divisible by m), or m can be added to the unique residue part
of a composition of n - m.  For m = 2 the sequence 1, 1, 3, 1, 5, 3,
11, 1, 13, 5, ... is OEIS A129095.

Values are exact Python integers of any size.  The recurrence is
evaluated with an explicit worklist instead of call-stack recursion, so
arguments like 10**6 are fine.  A CountCache holds every value computed
for one modulus and can be persisted to a plain text file, one
"m n value" triple per line, sorted by (m, n).
"""

from __future__ import annotations

import os
from typing import Dict, Iterable, List, Optional

from .core import check_modulus
from .report import CongruenceReport


class CountCache:
    """Memo table for one modulus; maps n to sp(n, m)."""

    def __init__(self, m: int, entries: Optional[Dict[int, int]] = None):
        check_modulus(m)
        self.m = m
        self.table: Dict[int, int] = dict(entries) if entries else {}

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"CountCache(m={self.m}, entries={len(self.table)})"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"weight must be a nonnegative integer, got {n!r}")


def sp(n: int, m: int, cache: Optional[CountCache] = None) -> int:
    """Number of semi-m-Pell compositions of n.

    The optional cache is filled as a side effect and may be reused
    across calls; it must have been created for the same modulus.
    Warm and cold caches give identical values.
    """
    _check_n(n)
    check_modulus(m)
    if cache is None:
        cache = CountCache(m)
    elif cache.m != m:
        raise ValueError(f"cache is for modulus {cache.m}, not {m}")
    table = cache.table
    if n in table:
        return table[n]
    # Depth-first worklist: a key waits on top of the stack until its
    # dependencies have values, then gets combined and popped.
    stack = [n]
    while stack:
        k = stack[-1]
        if k in table:
            stack.pop()
            continue
        if k < m:
            table[k] = 1
            stack.pop()
        elif k % m == 0:
            q = k // m
            if q in table:
                table[k] = table[q]
                stack.pop()
            else:
                stack.append(q)
        else:
            a = k - k % m
            b = k - m
            va = table.get(a)
            vb = table.get(b)
            if va is not None and vb is not None:
                table[k] = 2 * va + vb
                stack.pop()
            else:
                if va is None:
                    stack.append(a)
                if vb is None:
                    stack.append(b)
    return table[n]


def sp_table(n_max: int, moduli: Iterable[int]) -> List[List[int]]:
    """Rows of counts, one per modulus, columns n = 1 .. n_max."""
    _check_n(n_max)
    rows = []
    for m in moduli:
        cache = CountCache(m)
        rows.append([sp(n, m, cache) for n in range(1, n_max + 1)])
    return rows


def check_plateau_identity(v_max: int, m: int) -> CongruenceReport:
    """Constant count across each residue window, tied to a partial sum.

    For every n the m - 1 values sp(nm + 1, m), ..., sp(nm + m - 1, m)
    coincide and equal 1 + 2 * (sp(1, m) + ... + sp(n, m)).  Checked for
    all n <= v_max.
    """
    _check_n(v_max)
    check_modulus(m)
    report = CongruenceReport("plateau", {"m": m, "v_max": v_max})
    cache = CountCache(m)
    prefix = 0
    for n in range(v_max + 1):
        expected = 1 + 2 * prefix
        for r in range(1, m):
            report.record(f"n={n},r={r}", sp(n * m + r, m, cache), expected)
        prefix += sp(n + 1, m, cache)
    return report


def check_scaling_identity(m: int, j_max: int, v_max: int) -> CongruenceReport:
    """Counts are m-adically self-similar.

    Two statements are swept for 0 <= j <= j_max.  First, multiplying
    the weight by a power of m never changes the count: sp(m^j * h, m)
    equals sp(h, m) whenever m does not divide h, with h running through
    every admissible weight up to m * v_max + m - 1.  Second, on the
    plateau the value is explicit: sp(m^j * (m*v + r), m) = 2v + 1 for
    0 <= v <= min(v_max, m) and 1 <= r < m, which covers the count-one
    weights m^j * h with 1 <= h < m as the v = 0 case.
    """
    _check_n(j_max)
    _check_n(v_max)
    check_modulus(m)
    report = CongruenceReport("scaling", {"m": m, "j_max": j_max, "v_max": v_max})
    cache = CountCache(m)
    for j in range(j_max + 1):
        scale = m**j
        for h in range(1, m * v_max + m):
            if h % m:
                report.record(f"j={j},h={h}", sp(scale * h, m, cache), sp(h, m, cache))
        for v in range(min(v_max, m) + 1):
            for r in range(1, m):
                report.record(f"j={j},v={v},r={r}", sp(scale * (m * v + r), m, cache), 2 * v + 1)
    return report


def save_count_cache(path: str, caches: Dict[int, CountCache]) -> None:
    """Write caches as sorted "m n value" lines, one triple per line."""
    rows = []
    for m in sorted(caches):
        cache = caches[m]
        for n in sorted(cache.table):
            rows.append(f"{m} {n} {cache.table[n]}\n")
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.writelines(rows)
    os.replace(tmp, path)


def load_count_cache(path: str) -> Dict[int, CountCache]:
    """Read a cache file back into per-modulus CountCache objects.

    The format is strict: exactly three base-10 fields per line joined
    by single spaces, no trailing whitespace, lines sorted by (m, n)
    with no duplicates.  Any malformed line raises ValueError naming the
    line number.
    """
    tables: Dict[int, Dict[int, int]] = {}
    last_key = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.endswith("\n"):
                raise ValueError(f"{path}:{lineno}: missing trailing newline")
            body = line[:-1]
            fields = body.split(" ")
            if len(fields) != 3 or not all(f.isdigit() for f in fields):
                raise ValueError(f"{path}:{lineno}: expected three base-10 fields, got {body!r}")
            m, n, value = (int(f) for f in fields)
            if f"{m} {n} {value}" != body:
                raise ValueError(f"{path}:{lineno}: non-canonical field formatting in {body!r}")
            if m < 2:
                raise ValueError(f"{path}:{lineno}: modulus {m} out of range")
            if last_key is not None and (m, n) <= last_key:
                raise ValueError(f"{path}:{lineno}: entries not sorted by (m, n)")
            last_key = (m, n)
            tables.setdefault(m, {})[n] = value
    return {m: CountCache(m, entries) for m, entries in tables.items()}
