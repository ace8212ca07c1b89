"""Exhaustive generation of semi-m-Pell compositions and run forms.

Two generators build the families by the defining recursion.  For a
weight n with residue r = n mod m:

  * r == 0: scale every object of weight n // m by m (multiply each
    part, or each run base, by m);
  * r != 0: either glue a residue piece (the part r, or a run of r
    ones) to the front or the back of an object of weight n - r, or
    grow the unique residue piece of an object of weight n - m by m
    (add m to the part, or m more ones to the run of ones).

The three sources in the second branch are pairwise disjoint; that is
asserted during generation and a duplicate is a hard failure, as is an
object of weight n - m without exactly one residue piece.

Two oracles cross-check the generators by raw search that shares none
of the construction logic.  oracle_sp filters every composition of n
(2^(n-1) of them) through the membership test.  oracle_oc searches all
ways to pick distinct powers of m with multiplicities not divisible by
m summing to n, then arranges each non-peak power on the left or right
of the peak.  Both refuse weights above a hard bound rather than grind.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List

from .core import Composition, RunForm, check_modulus, is_semi_m_pell, runform_parts
from .report import CongruenceReport

# Hard input bounds.  The composition filter walks 2^(n-1) candidates,
# so 24 keeps a single call near ten million nodes.  The run-form search
# and the generators stay small far longer.
SP_ORACLE_LIMIT = 24
OC_ORACLE_LIMIT = 60
ENUMERATION_LIMIT = 100


class SearchBoundExceeded(ValueError):
    """An exhaustive search was asked to exceed its hard input bound."""


def _check_weight(n: int, limit: int, what: str) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"weight must be a nonnegative integer, got {n!r}")
    if n > limit:
        raise SearchBoundExceeded(f"{what} refuses n={n}, bound is {limit}")


@lru_cache(maxsize=None)
def _sp_members(n: int, m: int) -> tuple:
    if n == 0:
        return ((),)
    if n < m:
        return ((n,),)
    if n % m == 0:
        return tuple(tuple(p * m for p in c) for c in _sp_members(n // m, m))
    r = n % m
    out = []
    for c in _sp_members(n - r, m):
        out.append((r,) + c)
        out.append(c + (r,))
    for c in _sp_members(n - m, m):
        residue_at = [i for i, p in enumerate(c) if p % m == r]
        assert len(residue_at) == 1, f"weight {n - m} member {c} lacks a unique residue part"
        i = residue_at[0]
        out.append(c[:i] + (c[i] + m,) + c[i + 1 :])
    assert len(set(out)) == len(out), f"construction sources overlap at n={n}, m={m}"
    return tuple(out)


@lru_cache(maxsize=None)
def _oc_members(n: int, m: int) -> tuple:
    if n == 0:
        return ((),)
    if n < m:
        return (((1, n),),)
    if n % m == 0:
        return tuple(tuple((b * m, u) for b, u in rf) for rf in _oc_members(n // m, m))
    r = n % m
    out = []
    for rf in _oc_members(n - r, m):
        out.append(((1, r),) + rf)
        out.append(rf + ((1, r),))
    for rf in _oc_members(n - m, m):
        ones_at = [i for i, (b, _) in enumerate(rf) if b == 1]
        assert len(ones_at) == 1, f"weight {n - m} run form {rf} lacks a unique run of ones"
        i = ones_at[0]
        out.append(rf[:i] + ((1, rf[i][1] + m),) + rf[i + 1 :])
    assert len(set(out)) == len(out), f"construction sources overlap at n={n}, m={m}"
    return tuple(out)


def enumerate_sp(n: int, m: int) -> List[Composition]:
    """All semi-m-Pell compositions of n in lexicographic part order."""
    check_modulus(m)
    _check_weight(n, ENUMERATION_LIMIT, "enumerate_sp")
    return sorted(_sp_members(n, m))


def enumerate_oc(n: int, m: int) -> List[RunForm]:
    """All run forms of weight n, ordered by their flattened parts."""
    check_modulus(m)
    _check_weight(n, ENUMERATION_LIMIT, "enumerate_oc")
    return sorted(_oc_members(n, m), key=runform_parts)


def oracle_sp(n: int, m: int) -> List[Composition]:
    """Brute-force reference: filter all 2^(n-1) compositions of n.

    Generation is a depth-first walk that mutates one part list in
    place; each complete composition goes through is_semi_m_pell.
    Shares nothing with the recursive construction.
    """
    check_modulus(m)
    _check_weight(n, SP_ORACLE_LIMIT, "oracle_sp")
    if n == 0:
        return [()]
    members: List[Composition] = []
    parts: List[int] = []

    def rec(remaining: int) -> None:
        for p in range(1, remaining):
            parts.append(p)
            rec(remaining - p)
            parts.pop()
        parts.append(remaining)
        if is_semi_m_pell(parts, m):
            members.append(tuple(parts))
        parts.pop()

    rec(n)
    return sorted(members)


def oracle_oc(n: int, m: int) -> List[RunForm]:
    """Brute-force reference for run forms of weight n.

    Picks a set of distinct powers of m with multiplicities not
    divisible by m whose weighted sum is n, then sends every non-peak
    power to the left or the right of the peak; left runs ascend and
    right runs descend, so each choice yields exactly one run form.
    """
    check_modulus(m)
    _check_weight(n, OC_ORACLE_LIMIT, "oracle_oc")
    if n == 0:
        return [()]
    powers = []
    p = 1
    while p <= n:
        powers.append(p)
        p *= m
    found: List[RunForm] = []
    chosen: List[tuple] = []  # (base, mult), bases ascending

    def rec(idx: int, remaining: int) -> None:
        if remaining == 0 and chosen:
            peak = chosen[-1]
            rest = chosen[:-1]
            for sides in itertools.product((0, 1), repeat=len(rest)):
                left = tuple(run for run, s in zip(rest, sides) if s == 0)
                right = tuple(run for run, s in zip(rest, sides) if s == 1)
                found.append(left + (peak,) + right[::-1])
        for i in range(idx, len(powers)):
            base = powers[i]
            if base > remaining:
                break
            for mult in range(1, remaining // base + 1):
                if mult % m:
                    chosen.append((base, mult))
                    rec(i + 1, remaining - base * mult)
                    chosen.pop()

    rec(0, n)
    assert len(set(found)) == len(found), f"duplicate run form in search at n={n}, m={m}"
    return sorted(found, key=runform_parts)


def oracle_agreement(m: int, n_max: int, side: str = "both") -> CongruenceReport:
    """Set-compare generator output against the oracles for n <= n_max.

    Each instance records the size of the symmetric difference, which
    must be zero.  Weights beyond an oracle bound raise rather than
    silently shrink the sweep.
    """
    check_modulus(m)
    if side not in ("sp", "oc", "both"):
        raise ValueError(f"side must be sp, oc or both, got {side!r}")
    if side in ("sp", "both"):
        _check_weight(n_max, SP_ORACLE_LIMIT, "oracle_sp")
    if side in ("oc", "both"):
        _check_weight(n_max, OC_ORACLE_LIMIT, "oracle_oc")
    report = CongruenceReport("oracle", {"m": m, "n_max": n_max})
    for n in range(n_max + 1):
        if side in ("sp", "both"):
            diff = set(enumerate_sp(n, m)) ^ set(oracle_sp(n, m))
            report.record(f"sp:n={n}", len(diff), 0)
        if side in ("oc", "both"):
            diff = set(enumerate_oc(n, m)) ^ set(oracle_oc(n, m))
            report.record(f"oc:n={n}", len(diff), 0)
    return report
