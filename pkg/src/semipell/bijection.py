"""Weight-preserving bijection between compositions and run forms.

Each part of a semi-m-Pell composition factors uniquely as t = m^i * h
with m not dividing h.  Sending the part to the run (m^i repeated h
times) turns the sequence of max m-powers, which is distinct and
unimodal by membership, into the run bases, which must be distinct and
unimodal by the run-form rules.  Multiplicities inherit h, never
divisible by m.  Reading a run (base b, multiplicity u) back as the
single part b * u inverts the map, and weights match run by run since
t = m^i * h = base * mult.

For weight 62 and modulus 3 the composition (14, 3, 18, 27) maps to the
run form 1^14, 3, 9^2, 27.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .core import (
    Composition,
    RunForm,
    check_modulus,
    max_m_power,
    membership_failure,
    runform_failure,
)
from .enumeration import enumerate_oc, enumerate_sp
from .report import CongruenceReport


def to_oc(composition: Sequence[int], m: int) -> RunForm:
    """Expand each part m^i * h into a run of h copies of m^i.

    Rejects input that is not semi-m-Pell; the ValueError names the
    violated condition.
    """
    check_modulus(m)
    reason = membership_failure(composition, m)
    if reason is not None:
        raise ValueError(f"not a semi-m-Pell composition: {reason}")
    runs = []
    for part in composition:
        x = max_m_power(part, m)
        runs.append((x, part // x))
    return tuple(runs)


def from_oc(runs: Sequence[Tuple[int, int]], m: int) -> Composition:
    """Collapse each run (base, mult) into the single part base * mult."""
    check_modulus(m)
    reason = runform_failure(runs, m)
    if reason is not None:
        raise ValueError(f"not a valid run form: {reason}")
    return tuple(base * mult for base, mult in runs)


def roundtrip_check(n: int, m: int) -> CongruenceReport:
    """Verify the bijection on every object of weight n.

    Three facts per weight: from_oc(to_oc(c)) == c for every generated
    composition, to_oc(from_oc(rf)) == rf for every generated run form,
    and the image of the composition family is exactly the run-form
    family.  Violations record symmetric-difference or mismatch counts,
    all expected zero.
    """
    report = CongruenceReport("roundtrip", {"n": n, "m": m})
    compositions = enumerate_sp(n, m)
    runforms = enumerate_oc(n, m)
    bad = sum(1 for c in compositions if from_oc(to_oc(c, m), m) != c)
    report.record(f"n={n}:from_oc(to_oc)", bad, 0)
    bad = sum(1 for rf in runforms if to_oc(from_oc(rf, m), m) != rf)
    report.record(f"n={n}:to_oc(from_oc)", bad, 0)
    image = {to_oc(c, m) for c in compositions}
    report.record(f"n={n}:image", len(image ^ set(runforms)), 0)
    return report
