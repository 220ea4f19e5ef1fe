"""Torsion points of a smooth plane cubic, modeled on (Q/Z)^2.

Choosing a flex O as origin makes a smooth cubic D an elliptic curve whose
torsion subgroup is abstractly (Q/Z)^2.  Everything this package needs only
depends on the group structure of the torsion, so a torsion point is stored
as a pair of rationals (x, y) taken mod 1, and a line section, conic
section, and so on become statements about multiples of points.

Geometry dictionary, under a marking theta of the relevant points:

* order-1 and order-3 points are the nine flexes of D (stratum T1);
* T2 is the 27 points of order exactly 6 or 2 (6-torsion, not 3-torsion),
  where the conic with sixfold contact lives;
* T3 is the 108 points of order exactly 12 or 4, the generic quartic case;
* for cubics the relevant non-flex points have order dividing 9 (72 of
  them), handled by the census module.

The standard marking puts the six blown-up base points P1..P6 at the
3-torsion values fixed in :data:`STANDARD_MARKING` (their theta-values sum
to zero, as they must for points cut out by a conic), and a ninth-order
point O' with 3*O' equal to the hyperplane restriction.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .lattice import NUM_POINTS, DivisorClass


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """A point of (Q/Z)^2; coordinates are normalized into [0, 1)."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x) % 1)
        object.__setattr__(self, "y", Fraction(self.y) % 1)

    @classmethod
    def of(cls, x, y) -> "TorsionPoint":
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "TorsionPoint":
        return TorsionPoint(-self.x, -self.y)

    def __mul__(self, n: int) -> "TorsionPoint":
        return TorsionPoint(n * self.x, n * self.y)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"

    @property
    def is_zero(self) -> bool:
        return not self.x and not self.y


ZERO_POINT = TorsionPoint.of(0, 0)


def point_order(p: TorsionPoint) -> int:
    """Exact order: the lcm of the reduced denominators."""
    return math.lcm(p.x.denominator, p.y.denominator)


def torsion_points(n: int) -> list[TorsionPoint]:
    """The n^2 points killed by n, in lexicographic (x, y) order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [
        TorsionPoint(Fraction(i, n), Fraction(j, n))
        for i in range(n)
        for j in range(n)
    ]


class Stratum(enum.Enum):
    """The three 12-torsion strata relevant to quartic counting."""

    T1 = "T1"
    T2 = "T2"
    T3 = "T3"


def stratify(p: TorsionPoint) -> Optional[Stratum]:
    """Stratum of a point: T1 if 3p = 0, T2 if 6p = 0 but 3p != 0,
    T3 if 12p = 0 but 6p != 0, None for everything else."""
    if (3 * p).is_zero:
        return Stratum.T1
    if (6 * p).is_zero:
        return Stratum.T2
    if (12 * p).is_zero:
        return Stratum.T3
    return None


def stratum_sizes() -> dict[Stratum, int]:
    """Sizes (9, 27, 108) of T1, T2, T3, computed by enumerating the
    144 points of 12-torsion."""
    sizes = {s: 0 for s in Stratum}
    for p in torsion_points(12):
        s = stratify(p)
        assert s is not None
        sizes[s] += 1
    return sizes


def nonflex_nine_torsion_count() -> int:
    """Number of 9-torsion points that are not flexes (81 - 9 = 72)."""
    return sum(1 for p in torsion_points(9) if not (3 * p).is_zero)


def solve_division(c: TorsionPoint, m: int) -> list[TorsionPoint]:
    """All m^2 solutions of m * P = c within the torsion, in lexicographic
    order: the particular solution (c.x / m, c.y / m) translated by the
    m-torsion subgroup."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    base = TorsionPoint(c.x / m, c.y / m)
    sols = sorted(base + t for t in torsion_points(m))
    assert all(m * p == c for p in sols)
    return sols


@dataclass(frozen=True)
class MarkedCubicConfig:
    """A marking theta of the configuration used by the quartic census.

    ``base_points`` are the images of the six blown-up points P1..P6 (all
    3-torsion, summing to zero: twice a line section is a conic section),
    ``o_prime`` is a point of order 9 whose triple represents the
    hyperplane restriction, and ``q_points`` are the three 3-torsion
    points left over once the base points are chosen (they sum to zero,
    so they are cut out by a line).
    """

    base_points: tuple[TorsionPoint, ...]
    o_prime: TorsionPoint
    q_points: tuple[TorsionPoint, ...]

    def __post_init__(self) -> None:
        if len(self.base_points) != NUM_POINTS:
            raise ValueError("expected six marked base points")
        total = ZERO_POINT
        for p in self.base_points:
            if not (3 * p).is_zero:
                raise ValueError(f"base point {p} is not 3-torsion")
            total = total + p
        if not total.is_zero:
            raise ValueError("marked base points must sum to zero")
        if point_order(self.o_prime) != 9:
            raise ValueError("o_prime must have exact order 9")
        if len(self.q_points) != 3:
            raise ValueError("expected three auxiliary 3-torsion points")


STANDARD_MARKING = MarkedCubicConfig(
    base_points=(
        TorsionPoint.of(0, 0),
        TorsionPoint.of(Fraction(1, 3), 0),
        TorsionPoint.of(Fraction(2, 3), 0),
        TorsionPoint.of(0, Fraction(1, 3)),
        TorsionPoint.of(Fraction(1, 3), Fraction(1, 3)),
        TorsionPoint.of(Fraction(2, 3), Fraction(1, 3)),
    ),
    o_prime=TorsionPoint.of(Fraction(1, 9), 0),
    q_points=(
        TorsionPoint.of(0, Fraction(2, 3)),
        TorsionPoint.of(Fraction(1, 3), Fraction(2, 3)),
        TorsionPoint.of(Fraction(2, 3), Fraction(2, 3)),
    ),
)


def restriction_class(
    c: DivisorClass, config: MarkedCubicConfig = STANDARD_MARKING
) -> TorsionPoint:
    """Restriction of the class e*H - sum ai*Ei to the cubic, as a torsion
    point: 3e * theta(O') - sum ai * theta(Pi).

    The result is always 3-torsion (e and the ai are integers and the
    building blocks conspire), which is what lets the quartic equation
    4P = c have its uniform (1, 3, 12) solution pattern.
    """
    total = (3 * c.e) * config.o_prime
    for ai, p in zip(c.a, config.base_points):
        total = total - ai * p
    return total
