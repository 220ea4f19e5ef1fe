"""Picard lattice of the plane blown up in six points.

Classes are written e*H - a1*E1 - ... - a6*E6 with H the pullback of a line
and E1..E6 the exceptional curves; the intersection form is diagonal,
H^2 = 1, Ei^2 = -1.  The anticanonical degree of such a class against a
plane cubic through the six points is 3e - sum(ai), and its arithmetic
genus is governed by adjunction.

The degree-4 census (:func:`enumerate_classes`) searches for all classes of
anticanonical degree 4 and nonnegative arithmetic genus with multiplicities
bounded by the degree; quadratic Cremona transformations centered at triples
of the six points (:func:`cremona_reduce`) bring each of them to the conic
class 2H - E1 - E2 or to the cubic class 3H - E1 - ... - E5 depending on
the genus.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

NUM_POINTS = 6


@dataclass(frozen=True, order=True)
class DivisorClass:
    e: int
    a: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.a) != NUM_POINTS:
            raise ValueError(f"expected {NUM_POINTS} multiplicities, got {len(self.a)}")
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @classmethod
    def make(cls, e: int, a: Sequence[int]) -> "DivisorClass":
        return cls(e=e, a=tuple(a))

    def __str__(self) -> str:
        return class_literal(self)


# canonical class of the blowup: K = -3H + E1 + ... + E6
CANONICAL = DivisorClass.make(-3, (-1, -1, -1, -1, -1, -1))


def pairing(c1: DivisorClass, c2: DivisorClass) -> int:
    """Intersection number; the form is <H,H>=1, <Ei,Ei>=-1, mixed terms 0."""
    return c1.e * c2.e - sum(x * y for x, y in zip(c1.a, c2.a))


def tangency_degree(c: DivisorClass) -> int:
    """Degree of c against the anticanonical cubic: -<c, K> = 3e - sum(a)."""
    return -pairing(c, CANONICAL)


def arithmetic_genus(c: DivisorClass) -> int:
    """p_a = (e-1)(e-2)/2 - sum ai(ai-1)/2 (image genus of a plane curve
    of degree e with ordinary points of multiplicities ai)."""
    g = (c.e - 1) * (c.e - 2) // 2
    for ai in c.a:
        g -= ai * (ai - 1) // 2
    return g


def adjunction_genus(c: DivisorClass) -> int:
    """Same genus via adjunction, (c.c + c.K)/2 + 1; used as a cross-check."""
    num = pairing(c, c) + pairing(c, CANONICAL)
    quot, rem = divmod(num, 2)
    assert rem == 0
    return quot + 1


_TERM = re.compile(r"([+-]?)(\d*)(H|E([1-6]))")


def parse_class_literal(text: str) -> DivisorClass:
    """Parse literals like ``"2H-E1-E2"`` or ``"4H-E1-E2-2E3"``.

    Every character must belong to some term; repeated H or Ei terms
    accumulate.  Raises ValueError on anything else.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty class literal")
    if compact == "0":
        return DivisorClass.make(0, (0,) * NUM_POINTS)
    e = 0
    a = [0] * NUM_POINTS
    pos = 0
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None:
            raise ValueError(f"cannot parse class literal {text!r} at {compact[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3) == "H":
            e += sign * coef
        else:
            # the literal writes -E1 for multiplicity +1 at the first point
            a[int(m.group(4)) - 1] -= sign * coef
        pos = m.end()
    return DivisorClass.make(e, a)


def class_literal(c: DivisorClass) -> str:
    """Inverse of :func:`parse_class_literal`, e.g. ``"4H-E1-E2-2E3"``."""
    if c.e == 0 and not any(c.a):
        return "0"
    parts = []
    if c.e != 0:
        parts.append(("+" if c.e > 0 else "-") + (str(abs(c.e)) if abs(c.e) != 1 else "") + "H")
    for i, ai in enumerate(c.a, start=1):
        if ai == 0:
            continue
        parts.append(("-" if ai > 0 else "+") + (str(abs(ai)) if abs(ai) != 1 else "") + f"E{i}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def ordered_count(multiset: Sequence[int]) -> int:
    """Number of distinct orderings of a multiset: 6! / prod(multiplicity!)."""
    count = math.factorial(len(multiset))
    for value in set(multiset):
        count //= math.factorial(list(multiset).count(value))
    return count


@dataclass(frozen=True)
class ClassTableRow:
    """One unordered class of the census: multiplicities sorted ascending."""

    e: int
    a_multiset: tuple[int, int, int, int, int, int]
    p_a: int
    ordered_count: int

    @property
    def representative(self) -> DivisorClass:
        return DivisorClass.make(self.e, self.a_multiset)


def enumerate_classes(target_degree: int = 4) -> list[ClassTableRow]:
    """All unordered classes with tangency degree ``target_degree``, p_a >= 0.

    The search box is 0 <= ai <= target_degree with e determined by
    3e = target_degree + sum(ai); rows come back sorted by (e, multiset).
    For target degree 4 this is a census of 9 rows whose ordered classes
    total 216 of genus 0 and 27 of genus 1.
    """
    if target_degree < 0:
        raise ValueError("target degree must be nonnegative")
    rows = []
    e_min = -(-target_degree // 3)  # smallest e with 3e - target_degree >= 0
    e_max = (target_degree + NUM_POINTS * target_degree) // 3
    for e in range(e_min, e_max + 1):
        total = 3 * e - target_degree
        for a in combinations_with_replacement(range(target_degree + 1), NUM_POINTS):
            if sum(a) != total:
                continue
            genus = arithmetic_genus(DivisorClass.make(e, a))
            if genus < 0:
                continue
            rows.append(
                ClassTableRow(
                    e=e, a_multiset=a, p_a=genus, ordered_count=ordered_count(a)
                )
            )
    rows.sort(key=lambda r: (r.e, r.a_multiset))
    return rows


MAX_CREMONA_STEPS = 100


def cremona_steps(
    c: DivisorClass, max_steps: int = MAX_CREMONA_STEPS
) -> Iterator[DivisorClass]:
    """Yield the reduction path starting at c (multiplicities sorted
    descending), transforming at the three largest multiplicities while
    their sum exceeds e.

    Any choice of maximal triple gives the same multiset at each step, so
    working on the descending-sorted representative loses nothing.  Raises
    RuntimeError after ``max_steps`` steps (default 100), which signals an
    input outside the degree-4, p_a in {0, 1} regime this reduction is
    meant for.
    """
    e = c.e
    a = tuple(sorted(c.a, reverse=True))
    yield DivisorClass.make(e, a)
    for _ in range(max_steps):
        if a[0] + a[1] + a[2] <= e:
            return
        # quadratic transformation centered at the three largest points:
        # e -> 2e - a1 - a2 - a3, ai -> e - (sum of the other two), i <= 3
        e, a = (
            2 * e - a[0] - a[1] - a[2],
            tuple(
                sorted(
                    (e - a[1] - a[2], e - a[0] - a[2], e - a[0] - a[1]) + a[3:],
                    reverse=True,
                )
            ),
        )
        yield DivisorClass.make(e, a)
    raise RuntimeError(
        f"no terminal form within {max_steps} Cremona steps; "
        f"input {c} is outside the reduction's hypotheses"
    )


def cremona_reduce(c: DivisorClass) -> DivisorClass:
    """Terminal form of the reduction, multiplicities sorted descending.

    On the degree-4 census this is (2, [1,1,0,0,0,0]) for genus 0 and
    (3, [1,1,1,1,1,0]) for genus 1.
    """
    last = c
    for last in cremona_steps(c):
        pass
    return last
