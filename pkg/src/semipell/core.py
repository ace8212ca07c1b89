"""Core objects for semi-m-Pell compositions.

A composition of n is an ordered tuple of positive integers summing to n.
Fix a modulus m >= 2.  The max m-power of a positive integer N is the
largest power of m dividing N, so for N = u * m^s with m not dividing u
it equals m^s.  A composition is semi-m-Pell exactly when the max
m-powers of its parts are pairwise distinct and unimodal: read left to
right they rise strictly to a unique peak and then fall strictly.  The
empty composition and all single-part compositions qualify vacuously.

The same objects have a second life as "run forms": weakly unimodal
compositions whose parts are powers of m, where each part size occupies
a single contiguous run and no run length is divisible by m.  A run form
is stored as a tuple of (base, multiplicity) pairs in positional order.
Expanding part t = m^i * h (m not dividing h) into a run of h copies of
m^i converts one family into the other; see the bijection module.

Three reversible operators shrink a semi-m-Pell composition while
preserving membership: tau1 deletes a boundary part smaller than m,
tau2 subtracts m from a chosen part that exceeds m and is not divisible
by m, and tau3 divides every part by m when all parts are multiples.
Everything here is exact integer arithmetic, no floats anywhere.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

# A composition is a tuple of positive parts; a run form is a tuple of
# (base, multiplicity) pairs.  Plain tuples keep the combinatorics cheap
# and hashable.
Composition = Tuple[int, ...]
RunForm = Tuple[Tuple[int, int], ...]

NOT_DISTINCT = "max m-powers not distinct"
NOT_UNIMODAL = "max m-powers not unimodal"


def check_modulus(m: int) -> None:
    """Reject anything that is not an integer modulus >= 2."""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")


def max_m_power(n: int, m: int) -> int:
    """Largest power of m dividing n.

    max_m_power(50, 2) == 2 and max_m_power(216, 5) == 1.  Raises
    ValueError for n < 1 or m < 2; n = 0 would divide forever.
    """
    check_modulus(m)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"argument must be a positive integer, got {n!r}")
    x = 1
    while n % m == 0:
        n //= m
        x *= m
    return x


def is_semi_m_pell(composition: Sequence[int], m: int) -> bool:
    """True iff the max m-powers of the parts are distinct and unimodal.

    Runs in one left-to-right pass.  A repeated power fails the
    distinctness condition; a rise after any fall fails unimodality
    (equal neighbours are already repeats, so all comparisons are
    strict).
    """
    check_modulus(m)
    seen = set()
    prev = 0
    falling = False
    for part in composition:
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"parts must be positive integers, got {part!r}")
        x = 1
        while part % m == 0:
            part //= m
            x *= m
        if x in seen:
            return False
        seen.add(x)
        if x < prev:
            falling = True
        elif falling:
            return False
        prev = x
    return True


def membership_failure(composition: Sequence[int], m: int) -> Optional[str]:
    """Why a composition is not semi-m-Pell, or None if it is.

    Scans left to right and reports the first violated condition, either
    NOT_DISTINCT or NOT_UNIMODAL.  Kept separate from is_semi_m_pell so
    the hot path stays allocation-light; the two must always agree and
    the tests enforce that.
    """
    check_modulus(m)
    powers = [max_m_power(part, m) for part in composition]
    seen = set()
    prev = 0
    falling = False
    for x in powers:
        if x in seen:
            return NOT_DISTINCT
        seen.add(x)
        if x < prev:
            falling = True
        elif falling:
            return NOT_UNIMODAL
        prev = x
    return None


def weight(composition: Sequence[int]) -> int:
    return sum(composition)


def tau1(composition: Sequence[int], m: int) -> Composition:
    """Delete a boundary part smaller than m (first one wins a tie).

    Defined only when the first or last part is smaller than m; raises
    ValueError otherwise, and on the empty composition.
    """
    check_modulus(m)
    parts = tuple(composition)
    if parts and parts[0] < m:
        return parts[1:]
    if parts and parts[-1] < m:
        return parts[:-1]
    raise ValueError("no boundary part smaller than the modulus")


def tau2(composition: Sequence[int], t: int, m: int) -> Composition:
    """Subtract m from the part at 1-based position t.

    The chosen part must exceed m and must not be divisible by m, so the
    result keeps positive parts and the part's residue class mod m.
    """
    check_modulus(m)
    parts = tuple(composition)
    if not 1 <= t <= len(parts):
        raise ValueError(f"position {t} out of range for {len(parts)} parts")
    c = parts[t - 1]
    if c <= m or c % m == 0:
        raise ValueError(f"part {c} at position {t} must exceed {m} and not be divisible by {m}")
    return parts[: t - 1] + (c - m,) + parts[t:]


def tau3(composition: Sequence[int], m: int) -> Composition:
    """Divide every part by m; all parts must be divisible by m."""
    check_modulus(m)
    parts = tuple(composition)
    for c in parts:
        if c % m != 0:
            raise ValueError(f"part {c} is not divisible by {m}")
    return tuple(c // m for c in parts)


def runform_weight(runs: RunForm) -> int:
    return sum(base * mult for base, mult in runs)


def runform_parts(runs: RunForm) -> Composition:
    """Flatten a run form into its underlying part sequence."""
    return tuple(base for base, mult in runs for _ in range(mult))


def runform_failure(runs: Sequence[Tuple[int, int]], m: int) -> Optional[str]:
    """Why a run sequence is not a valid run form, or None if it is.

    Checks, in order: positive bases that are powers of m, positive
    multiplicities not divisible by m, pairwise distinct bases (each
    part size lives in one place), and bases that rise strictly to a
    unique peak then fall strictly.
    """
    check_modulus(m)
    bases = []
    for base, mult in runs:
        if not isinstance(base, int) or base < 1:
            return f"run base {base!r} is not a positive integer"
        b = base
        while b % m == 0:
            b //= m
        if b != 1:
            return f"run base {base} is not a power of {m}"
        if not isinstance(mult, int) or mult < 1:
            return f"run multiplicity {mult!r} is not a positive integer"
        if mult % m == 0:
            return f"run multiplicity {mult} is divisible by {m}"
        bases.append(base)
    if len(set(bases)) != len(bases):
        dup = next(b for i, b in enumerate(bases) if b in bases[:i])
        return f"run base {dup} occurs in more than one place"
    if bases:
        peak = bases.index(max(bases))
        for i in range(peak):
            if bases[i] >= bases[i + 1]:
                return "run bases not unimodal"
        for i in range(peak, len(bases) - 1):
            if bases[i] <= bases[i + 1]:
                return "run bases not unimodal"
    return None


def validate_runform(runs: Sequence[Tuple[int, int]], m: int) -> bool:
    """True iff runs is a well-formed run form for modulus m."""
    return runform_failure(runs, m) is None
