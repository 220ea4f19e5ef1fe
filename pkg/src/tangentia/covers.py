"""Multiple-cover contributions and instanton numbers for maximal tangency.

A degree-d cover of a rational curve meeting a fixed anticanonical divisor at
a single point with contact order w contributes

    M_w[d] = C(d(w-1) - 1, d - 1) / d^2

to the corresponding relative invariant, where C is the generalized binomial
(so w = 1 makes sense and gives M_1[d] = C(-d-1, d-1)/d^2).  Covers of a
rigid curve inside the anticanonical divisor itself contribute

    M'_n[d] = (-1)^{n(d-1)} / d^2

when the contact order of the base curve is n.  Because the sign only
depends on n(d-1) mod 2, tripling n never changes M'; in particular the
local contribution is insensitive to replacing contact order n by 3n.

The instanton numbers m_w[d] are defined by the multiple cover formula

    M_w[d] = sum over factorizations d = d1 * d2 of M'_{d1 w}[d2] * m_w[d1],

which is triangular in d and is solved by the recursion implemented in
:func:`instanton_numbers`.  Empirically the m_w[d] are positive integers
whenever w >= 3; w = 1, 2 never arise as the contact order of a plane curve
with a cubic (that order is always 3 times the degree), and there the
generalized formula yields zeros from d = 2 on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .rationals import Rat, binomial


def multiple_cover(w: int, d: int) -> Rat:
    """Contribution M_w[d] of connected d-fold covers, contact order w."""
    _require_positive(w=w, d=d)
    return Rat(binomial(d * (w - 1) - 1, d - 1), d * d)


def local_cover(n: int, d: int) -> Rat:
    """Contribution M'_n[d] of d-fold covers of a curve inside the divisor."""
    _require_positive(n=n, d=d)
    sign = -1 if (n * (d - 1)) % 2 else 1
    return Rat(sign, d * d)


def divisors(d: int) -> Iterator[int]:
    """Positive divisors of d in increasing order, by trial division."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    for k in range(1, d + 1):
        if d % k == 0:
            yield k


def instanton_numbers(w: int, d_max: int) -> dict[int, Rat]:
    """Solve the multiple cover formula for m_w[1..d_max].

    m_w[d] = M_w[d] - sum over proper divisors d1 of d of
             M'_{d1 w}[d / d1] * m_w[d1].
    """
    _require_positive(w=w, d_max=d_max)
    m: dict[int, Rat] = {}
    for d in range(1, d_max + 1):
        value = multiple_cover(w, d)
        for d1 in divisors(d):
            if d1 == d:
                continue
            value -= local_cover(d1 * w, d // d1) * m[d1]
        m[d] = value
    return m


@dataclass(frozen=True)
class IntegralityRow:
    """One (w, d) entry of an integrality report.

    ``extrapolated`` marks contact orders below 3, which cannot occur for a
    plane curve against a cubic; positivity is only expected on geometric
    input, so an extrapolated row passes on integrality alone.
    """

    w: int
    d: int
    value: Rat
    is_integer: bool
    is_positive: bool
    extrapolated: bool

    @property
    def passes(self) -> bool:
        return self.is_integer and (self.is_positive or self.extrapolated)


def integrality_report(w_max: int, d_max: int) -> list[IntegralityRow]:
    """Integrality and positivity of m_w[d] over the requested box.

    The report covers exactly 1 <= w <= w_max, 1 <= d <= d_max; nothing
    outside the user-supplied bounds is claimed.
    """
    _require_positive(w_max=w_max, d_max=d_max)
    rows = []
    for w in range(1, w_max + 1):
        m = instanton_numbers(w, d_max)
        for d in range(1, d_max + 1):
            v = m[d]
            rows.append(
                IntegralityRow(
                    w=w,
                    d=d,
                    value=v,
                    is_integer=v.denominator == 1,
                    is_positive=v > 0,
                    extrapolated=w < 3,
                )
            )
    return rows


# Table kinds: "relative" holds M_w[d] keyed by (w, d), "local" holds
# M'_n[d] keyed by (n, d), "instanton" holds m_w[d] keyed by (w, d).
TABLE_KINDS = ("relative", "local", "instanton")


@dataclass(frozen=True)
class CoverTable:
    kind: str
    entries: Mapping[tuple[int, int], Rat]

    @classmethod
    def build(cls, kind: str, first_max: int, d_max: int) -> "CoverTable":
        if kind not in TABLE_KINDS:
            raise ValueError(f"unknown table kind {kind!r}")
        entries: dict[tuple[int, int], Rat] = {}
        for w in range(1, first_max + 1):
            if kind == "instanton":
                column = instanton_numbers(w, d_max)
                for d in range(1, d_max + 1):
                    entries[(w, d)] = column[d]
            else:
                fn = multiple_cover if kind == "relative" else local_cover
                for d in range(1, d_max + 1):
                    entries[(w, d)] = fn(w, d)
        return cls(kind=kind, entries=entries)

    def check(self) -> None:
        """Recompute every entry; raise AssertionError on any mismatch.

        For instanton tables this also re-verifies the defining identity
        sum over d = d1*d2 of M'_{d1 w}[d2] * m_w[d1] = M_w[d], which makes
        sense because a (w, d) entry forces (w, d1) entries for all d1 | d.
        """
        for (w, d), value in self.entries.items():
            if self.kind == "relative":
                assert value == multiple_cover(w, d)
            elif self.kind == "local":
                assert value == local_cover(w, d)
            else:
                total = sum(
                    local_cover(d1 * w, d // d1) * self.entries[(w, d1)]
                    for d1 in divisors(d)
                )
                assert total == multiple_cover(w, d)


def _require_positive(**named: int) -> None:
    for name, value in named.items():
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")
