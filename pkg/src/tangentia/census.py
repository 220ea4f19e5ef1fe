"""Census of maximally tangent rational curves of degree 1 through 4.

For a point P on a smooth cubic D, the set of degree-d rational curves
meeting D only at P decomposes into irreducible immersed curves, multiple
covers of lower-degree members, and (in degree 4) reducible line-plus-cubic
pairs.  Which shapes occur depends only on the stratum of P:

* T1 (flexes), T2 (order 2 or 6), T3 (order 4 or 12) as in
  :mod:`tangentia.torsion`;
* for degree 3 the interesting non-flex points are the 72 points of order
  9, exposed here under the census-only label ``"NF9"``.

Immersed counts in degrees 3 and 4 (genus-1 classes) come from an Euler
characteristic budget: the relevant pencil sweeps out a rational elliptic
surface with chi = 12, each nodal rational member contributes 1, and the
special non-nodal fiber eats a known amount.  The per-class curve counts
feed :func:`aggregate_N`, and dividing by three times the stratum size
(a triple cover intervenes between the surface where classes live and the
plane) gives the immersed quartic counts per point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .lattice import enumerate_classes
from .torsion import Stratum, nonflex_nine_torsion_count, stratify, stratum_sizes, torsion_points

# census-only stratum label for the 72 points of exact order 9 (degree 3)
NONFLEX_NINE = "NF9"

CensusStratum = Union[Stratum, str]

# Euler characteristic of the rational elliptic surface swept out by any of
# the pencils below (the plane blown up in the pencil's nine base points).
CHI_SURFACE = 12

# Euler characteristics of the one non-nodal special fiber in each pencil;
# every other singular member is a nodal rational curve contributing 1.
CHI_TRIPLE_TANGENT_LINE = 10  # cubics with ninefold contact at a flex
CHI_CUBIC_NONFLEX_SPECIAL = 9  # cubics with ninefold contact, order-9 point
CHI_QUARTIC_ORDER2_SPECIAL = 6  # genus-1 quartic classes at a T2 point
CHI_QUARTIC_ORDER4_SPECIAL = 4  # genus-1 quartic classes at a T3 point

# Immersed quartic counts per point, as stated by the classification of
# maximally tangent quartics; tests re-derive them via aggregate_N.
IMMERSED_QUARTICS = {Stratum.T1: 8, Stratum.T2: 14, Stratum.T3: 16}


def euler_budget(chi_surface: int, chi_special_fiber: int) -> int:
    """Number of nodal rational members of a pencil: chi of the total
    surface minus chi of the special fiber.  Inputs must be nonnegative."""
    if chi_surface < 0 or chi_special_fiber < 0:
        raise ValueError("Euler characteristics must be nonnegative")
    return chi_surface - chi_special_fiber


def quadrisection_split() -> dict[Stratum, int]:
    """How the 16 solutions of 4P = c (c any 3-torsion point) fall into the
    strata: translating by the 4-torsion subgroup distributes them (1, 3, 12)
    regardless of c, so the split is read off at c = 0."""
    split = {s: 0 for s in Stratum}
    for t in torsion_points(4):
        s = stratify(t)
        assert s is not None
        split[s] += 1
    return split


def class_curve_counts(p_a: int) -> dict[Stratum, int]:
    """Irreducible curves contributed by one ordered class of the given
    genus, totalled over its 16 quartic division points, per stratum.

    Genus 0: the class contains a unique member through each division
    point, giving the bare (1, 3, 12) split.  Genus 1: the class moves in
    an elliptic pencil; flex-stratum points contribute nothing and the
    other strata contribute their Euler budget of nodal members.
    """
    split = quadrisection_split()
    if p_a == 0:
        return split
    if p_a == 1:
        return {
            Stratum.T1: 0,
            Stratum.T2: split[Stratum.T2]
            * euler_budget(CHI_SURFACE, CHI_QUARTIC_ORDER2_SPECIAL),
            Stratum.T3: split[Stratum.T3]
            * euler_budget(CHI_SURFACE, CHI_QUARTIC_ORDER4_SPECIAL),
        }
    raise ValueError(f"no curve-count rule for arithmetic genus {p_a}")


def aggregate_N() -> dict[Stratum, int]:
    """Total irreducible immersed quartic count N_i per stratum, summed
    over all 243 ordered classes of the degree-4 table."""
    totals = {s: 0 for s in Stratum}
    for row in enumerate_classes(4):
        counts = class_curve_counts(row.p_a)
        for s in Stratum:
            totals[s] += row.ordered_count * counts[s]
    return totals


def count_M4(stratum: Stratum) -> int:
    """Immersed quartics with full tangency at one point of the stratum:
    N_i / (3 * #T_i).  The division is exact; anything else is a bug."""
    n = aggregate_N()[stratum]
    denom = 3 * stratum_sizes()[stratum]
    quot, rem = divmod(n, denom)
    if rem:
        raise ArithmeticError(
            f"aggregate count {n} for {stratum.value} is not divisible by {denom}"
        )
    return quot


# ---------------------------------------------------------------------------
# boundary census: the full decomposition per (degree, stratum)
# ---------------------------------------------------------------------------

IMMERSED = "immersed"
COVER = "cover"
PAIR = "pair"
CUSPIDAL = "cuspidal"  # only behind the special-cubic flag

COMPONENT_KINDS = (IMMERSED, COVER, PAIR, CUSPIDAL)


@dataclass(frozen=True)
class Component:
    """One shape of curve in a census entry.

    ``count`` is how many such curves exist per point of the stratum.
    Covers carry the degree of the underlying curve and how many times it
    is traversed; pairs carry the contact orders of their two pieces.
    """

    kind: str
    count: int
    base_degree: Optional[int] = None
    multiplicity: Optional[int] = None
    tangencies: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if self.kind not in COMPONENT_KINDS:
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.count < 1:
            raise ValueError("component count must be positive")
        if self.kind == COVER and (
            self.base_degree is None or self.multiplicity is None
        ):
            raise ValueError("cover components need base_degree and multiplicity")
        if self.kind == PAIR and self.tangencies is None:
            raise ValueError("pair components need their two contact orders")

    def degree(self, entry_degree: int) -> int:
        if self.kind == COVER:
            return self.base_degree * self.multiplicity
        return entry_degree


@dataclass(frozen=True)
class CensusEntry:
    degree: int
    stratum: str  # "T1" | "T2" | "T3" | "NF9"
    points: int  # how many points of the cubic lie in this stratum
    components: tuple[Component, ...]
    special_cubic: bool = False

    def __post_init__(self) -> None:
        for comp in self.components:
            if comp.kind == COVER and comp.degree(self.degree) != self.degree:
                raise ValueError(
                    f"cover {comp} has degree {comp.degree(self.degree)}, "
                    f"entry wants {self.degree}"
                )
            if comp.kind == PAIR and sum(comp.tangencies) != 3 * self.degree:
                raise ValueError(
                    f"pair contact orders {comp.tangencies} do not add up to "
                    f"{3 * self.degree}"
                )


def census_strata(degree: int) -> tuple[str, ...]:
    """Stratum labels that carry curves of the given degree."""
    table = {
        1: ("T1",),
        2: ("T1", "T2"),
        3: ("T1", NONFLEX_NINE),
        4: ("T1", "T2", "T3"),
    }
    if degree not in table:
        raise ValueError(f"census covers degrees 1..4, got {degree}")
    return table[degree]


def stratum_point_count(label: str) -> int:
    if label == NONFLEX_NINE:
        return nonflex_nine_torsion_count()
    return stratum_sizes()[Stratum(label)]


def _as_label(stratum: CensusStratum) -> str:
    return stratum.value if isinstance(stratum, Stratum) else str(stratum)


def boundary_census(
    degree: int, stratum: CensusStratum, special_cubic: bool = False
) -> CensusEntry:
    """Decomposition of the maximal-tangency locus at one point.

    ``special_cubic`` selects the variant where the two nodal cubics at a
    flex degenerate to one cuspidal cubic (this happens for special smooth
    cubics); it only alters degree 3 at T1, and degree 4 is refused under
    the flag because its line-plus-cubic pairs inherit the cusp.
    """
    label = _as_label(stratum)
    valid = census_strata(degree)
    if label not in valid:
        raise ValueError(
            f"degree {degree} has no curves at stratum {label!r}; "
            f"valid strata: {', '.join(valid)}"
        )
    if special_cubic and degree == 4:
        raise ValueError(
            "the degree-4 census is not available for the special cubic: "
            "its line-plus-cubic pairs involve a cuspidal member"
        )

    nodal_cubics_at_flex = euler_budget(CHI_SURFACE, CHI_TRIPLE_TANGENT_LINE)
    components: tuple[Component, ...]
    if degree == 1:
        components = (Component(IMMERSED, 1),)
    elif degree == 2:
        if label == "T1":
            components = (Component(COVER, 1, base_degree=1, multiplicity=2),)
        else:
            components = (Component(IMMERSED, 1),)
    elif degree == 3:
        if label == "T1":
            if special_cubic:
                components = (
                    Component(COVER, 1, base_degree=1, multiplicity=3),
                    Component(CUSPIDAL, 1),
                )
            else:
                components = (
                    Component(COVER, 1, base_degree=1, multiplicity=3),
                    Component(IMMERSED, nodal_cubics_at_flex),
                )
        else:
            components = (
                Component(
                    IMMERSED, euler_budget(CHI_SURFACE, CHI_CUBIC_NONFLEX_SPECIAL)
                ),
            )
    else:
        if label == "T1":
            components = (
                Component(COVER, 1, base_degree=1, multiplicity=4),
                Component(PAIR, nodal_cubics_at_flex, tangencies=(3, 9)),
                Component(IMMERSED, IMMERSED_QUARTICS[Stratum.T1]),
            )
        elif label == "T2":
            components = (
                Component(COVER, 1, base_degree=2, multiplicity=2),
                Component(IMMERSED, IMMERSED_QUARTICS[Stratum.T2]),
            )
        else:
            components = (Component(IMMERSED, IMMERSED_QUARTICS[Stratum.T3]),)

    return CensusEntry(
        degree=degree,
        stratum=label,
        points=stratum_point_count(label),
        components=components,
        special_cubic=special_cubic,
    )
