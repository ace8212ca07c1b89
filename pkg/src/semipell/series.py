"""Truncated power series with exact integer coefficients.

A Series is a coefficient vector c[0..order]; arithmetic truncates past
the order and never touches floats.  The sizes of the two composition
families are generated by

    Q_m(x) = 1 + sum_{i>=0} P_i(x) * prod_{t<i} (1 + 2 P_t(x)),

where P_t(x) = sum_{u >= 1, m not dividing u} x^(m^t * u) collects the
possible peak runs with base m^t: a peak of base m^t and multiplicity u
contributes x^(m^t * u), and every smaller power m^t is either absent
(the 1) or carries its own run on one of two sides of the peak (the
factor 2).  Summing over the peak base i makes the coefficient of x^n
count the run forms of weight n, so it equals sp(n, m).

Q_m also satisfies a functional equation under x -> x^m.  With
s(x) = x + ... + x^(m-1),

    (1 - x^m) Q_m(x) + s(x) = (1 + 2 s(x) - x^m) Q_m(x^m),

and functional_equation_residual returns the truncated difference of
the two sides, which must vanish identically.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Union

from .core import check_modulus


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a nonnegative integer, got {order!r}")


class Series:
    """Integer coefficients c[0..order] of a truncated power series."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], order: Optional[int] = None):
        coeffs = list(coeffs)
        if order is not None:
            _check_order(order)
            if len(coeffs) > order + 1:
                raise ValueError("more coefficients than the order admits")
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        for c in coeffs:
            if not isinstance(c, int):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> "Series":
        """c * x^exponent, silently truncated if the exponent is too big."""
        _check_order(order)
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        out = cls.zero(order)
        if exponent <= order:
            out.coeffs[exponent] = coefficient
        return out

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{head}{tail}], order={self.order})"

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _match(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "Series") -> "Series":
        self._match(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._match(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return Series([c * other for c in self.coeffs])
        self._match(other)
        n = len(self.coeffs)
        out = [0] * n
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += a * b[j]
        return Series(out)

    __rmul__ = __mul__

    def substitute_power(self, k: int) -> "Series":
        """The series in x^k, truncated at the same order."""
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"substitution power must be a positive integer, got {k!r}")
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                if i * k > self.order:
                    break
                out[i * k] = c
        return Series(out)


def geometric_inverse(k: int, order: int) -> Series:
    """1 / (1 - x^k) truncated: ones at every multiple of k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"step must be a positive integer, got {k!r}")
    _check_order(order)
    out = Series.zero(order)
    e = 0
    while e <= order:
        out.coeffs[e] = 1
        e += k
    return out


def _residue_block(m: int, level: int, order: int) -> Series:
    # x^(m^level * 1) + ... + x^(m^level * (m-1))
    out = Series.zero(order)
    base = m**level
    for r in range(1, m):
        if base * r > order:
            break
        out.coeffs[base * r] = 1
    return out


def qm_peak_terms(m: int, order: int) -> List[Series]:
    """One series per peak base m^i; term i counts run forms peaking there."""
    check_modulus(m)
    _check_order(order)
    terms = []
    prod = Series.one(order)
    level = 0
    while m**level <= order:
        peak = _residue_block(m, level, order) * geometric_inverse(m ** (level + 1), order)
        terms.append(peak * prod)
        prod = prod * (Series.one(order) + 2 * peak)
        level += 1
    return terms


def qm_series(m: int, order: int) -> Series:
    """Counting series: coefficient of x^n is sp(n, m), constant term 1."""
    out = Series.one(order)
    for term in qm_peak_terms(m, order):
        out = out + term
    return out


def functional_equation_residual(m: int, order: int) -> Series:
    """Difference of the two sides of the functional equation.

    Identically zero through the requested order when the counting
    series is correct; any nonzero coefficient is a defect witness.
    """
    check_modulus(m)
    _check_order(order)
    q = qm_series(m, order)
    q_sub = q.substitute_power(m)
    one = Series.one(order)
    xm = Series.monomial(m, order)
    s = Series.zero(order)
    for r in range(1, min(m, order + 1)):
        s.coeffs[r] = 1
    lhs = (one - xm) * q + s
    rhs = (one + 2 * s - xm) * q_sub
    return lhs - rhs
