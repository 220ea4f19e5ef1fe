"""Layered trees recording how a maximally tangent curve can degenerate.

A combinatorial type with parameters (n, r) is a rooted tree whose vertices
are arranged in layers 1 (top) through n+1 (bottom), subject to:

(1) layer 1 consists of a single vertex, and the bottom layer carries a
    labeling bijection from {1, ..., r};
(2) the edges form a tree running only between consecutive layers, every
    vertex below the top layer has exactly one parent, and every vertex
    above the bottom layer has at least one child;
(3) every layer except the bottom one contains a vertex with at least two
    children, so each step down genuinely branches somewhere.

Identifying each vertex with the set of bottom labels below it shows that
such trees are exactly the chains of set partitions of {1, ..., r} from the
discrete partition (bottom) to the one-block partition (top) that coarsen
strictly at every step.  That is how :func:`enumerate_types` produces them,
and it makes the counting facts transparent: there are no types at all once
n exceeds r - 1, exactly one for (n, r) = (0, 1) or (1, r >= 2), and for
example three for (n, r) = (2, 3).

Weights: given positive integers attached to the bottom labels (contact
orders of the degenerate pieces), :func:`propagate_weights` sums them up
the tree, so the top vertex carries the total contact order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

MAX_LAYERS = 6
MAX_LABELS = 6

Partition = tuple[tuple[int, ...], ...]


def _canon_partition(blocks) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of ``items``, by recursive insertion."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1 :]
        yield [[first]] + smaller


def _strict_coarsenings(partition: Partition) -> Iterator[Partition]:
    """Partitions obtained by merging at least two blocks of ``partition``."""
    blocks = list(partition)
    for grouping in _set_partitions(range(len(blocks))):
        if len(grouping) == len(blocks):
            continue  # nothing merged
        merged = []
        for group in grouping:
            merged.append(tuple(sorted(x for g in group for x in blocks[g])))
        yield _canon_partition(merged)


@dataclass(frozen=True)
class CombType:
    """A layered tree; see the module docstring for the axioms.

    ``layers[j - 1]`` holds the vertex ids of layer j, ``parents`` maps each
    non-top vertex to its parent, and ``leaf_order[i]`` is the bottom vertex
    labeled i + 1.  Construction only checks that the ids are coherent;
    whether the axioms hold is the business of :meth:`violations`, so that
    broken candidates can be built and diagnosed.
    """

    n: int
    r: int
    layers: tuple[tuple[str, ...], ...]
    parents: tuple[tuple[str, str], ...]
    leaf_order: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.r < 1:
            raise ValueError("need n >= 0 and r >= 1")
        if len(self.layers) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} layers, got {len(self.layers)}")
        seen: set[str] = set()
        for layer in self.layers:
            for v in layer:
                if v in seen:
                    raise ValueError(f"duplicate vertex id {v!r}")
                seen.add(v)
        for child, parent in self.parents:
            if child not in seen or parent not in seen:
                raise ValueError("parent table mentions an unknown vertex")
        for v in self.leaf_order:
            if v not in seen:
                raise ValueError("leaf order mentions an unknown vertex")

    # -- structure helpers ------------------------------------------------

    @property
    def parent_map(self) -> dict[str, str]:
        return dict(self.parents)

    @property
    def children_map(self) -> dict[str, list[str]]:
        children: dict[str, list[str]] = {v: [] for layer in self.layers for v in layer}
        for child, parent in self.parents:
            if parent in children:
                children[parent].append(child)
        for kids in children.values():
            kids.sort()
        return children

    def layer_of(self, v: str) -> int:
        for j, layer in enumerate(self.layers, start=1):
            if v in layer:
                return j
        raise KeyError(v)

    def violations(self) -> list[int]:
        """Sorted list of violated axiom numbers; empty means valid."""
        bad: set[int] = set()

        if len(self.layers[0]) != 1:
            bad.add(1)
        bottom = set(self.layers[-1])
        if (
            len(self.leaf_order) != self.r
            or len(set(self.leaf_order)) != self.r
            or set(self.leaf_order) != bottom
        ):
            bad.add(1)

        parent_map = self.parent_map
        children = self.children_map
        for j, layer in enumerate(self.layers, start=1):
            for v in layer:
                if j == 1:
                    if v in parent_map:
                        bad.add(2)
                else:
                    p = parent_map.get(v)
                    if p is None or p not in self.layers[j - 2]:
                        bad.add(2)
                if j <= self.n and not children[v]:
                    bad.add(2)
        if len(self.parents) != len(set(c for c, _ in self.parents)):
            bad.add(2)  # some vertex has two parents

        for j in range(1, self.n + 1):
            if not any(len(children[v]) >= 2 for v in self.layers[j - 1]):
                bad.add(3)

        return sorted(bad)

    # -- partition chain view ---------------------------------------------

    @classmethod
    def from_partition_chain(cls, chain: Sequence[Partition]) -> "CombType":
        """Build the canonical tree for a chain (top partition first,
        discrete partition last); vertex ids are ``"layer:index"`` with
        blocks sorted by their label sets."""
        n = len(chain) - 1
        r = sum(len(b) for b in chain[-1])
        layers = []
        ids: list[dict[tuple[int, ...], str]] = []
        for j, part in enumerate(chain, start=1):
            names = {block: f"{j}:{i}" for i, block in enumerate(part)}
            ids.append(names)
            layers.append(tuple(names[b] for b in part))
        parents = []
        for j in range(1, n + 1):  # layers j+1 -> j
            above = chain[j - 1]
            for block, name in ids[j].items():
                owner = next(b for b in above if set(block) <= set(b))
                parents.append((name, ids[j - 1][owner]))
        leaf_order = tuple(ids[-1][(label,)] for label in range(1, r + 1))
        return cls(
            n=n,
            r=r,
            layers=tuple(layers),
            parents=tuple(sorted(parents)),
            leaf_order=leaf_order,
        )

    def partition_chain(self) -> tuple[Partition, ...]:
        """Inverse view: the chain of bottom-label partitions, top first."""
        label_of = {v: i + 1 for i, v in enumerate(self.leaf_order)}
        below: dict[str, set[int]] = {v: {label_of[v]} for v in self.layers[-1]}
        chain = [_canon_partition([tuple(below[v]) for v in self.layers[-1]])]
        for j in range(self.n, 0, -1):
            parent_map = self.parent_map
            groups: dict[str, set[int]] = {v: set() for v in self.layers[j - 1]}
            for v in self.layers[j]:
                groups[parent_map[v]] |= below[v]
            below = groups
            chain.append(_canon_partition(tuple(s) for s in below.values()))
        return tuple(reversed(chain))


def validate(candidate: CombType) -> list[int]:
    """Violated axiom numbers of a candidate tree (empty list = valid)."""
    return candidate.violations()


def enumerate_types(n: int, r: int) -> list[CombType]:
    """All combinatorial types with n + 1 layers and r labeled bottom
    vertices, canonically ordered.  Bounded to n <= 6 and r <= 6."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if n > MAX_LAYERS or r > MAX_LABELS:
        raise ValueError(
            f"enumeration is budgeted to n <= {MAX_LAYERS}, r <= {MAX_LABELS}"
        )
    discrete = _canon_partition([(i,) for i in range(1, r + 1)])
    chains_up: list[list[Partition]] = [[discrete]]
    for _ in range(n):
        chains_up = [
            chain + [coarser]
            for chain in chains_up
            for coarser in _strict_coarsenings(chain[-1])
        ]
    total = _canon_partition([tuple(range(1, r + 1))])
    chains = sorted(tuple(reversed(c)) for c in chains_up if c[-1] == total)
    return [CombType.from_partition_chain(c) for c in chains]


def relabel_leaves(ct: CombType, permutation: Mapping[int, int]) -> CombType:
    """Apply a permutation of the bottom labels and recanonicalize."""
    if sorted(permutation) != list(range(1, ct.r + 1)) or sorted(
        permutation.values()
    ) != list(range(1, ct.r + 1)):
        raise ValueError(f"not a permutation of 1..{ct.r}")
    chain = ct.partition_chain()
    mapped = tuple(
        _canon_partition(tuple(permutation[x] for x in block) for block in part)
        for part in chain
    )
    return CombType.from_partition_chain(mapped)


@dataclass(frozen=True)
class WeightedCombType:
    shape: CombType
    weights: tuple[tuple[str, int], ...]  # (vertex id, weight), sorted

    def weight(self, v: str) -> int:
        return dict(self.weights)[v]

    @property
    def top_weight(self) -> int:
        return self.weight(self.shape.layers[0][0])


def propagate_weights(
    shape: CombType, root_weights: Sequence[int]
) -> WeightedCombType:
    """Attach ``root_weights[i]`` to bottom label i + 1 and sum upward;
    every interior vertex gets the total weight of its children."""
    if shape.violations():
        raise ValueError("cannot weight an invalid combinatorial type")
    if len(root_weights) != shape.r:
        raise ValueError(f"expected {shape.r} weights, got {len(root_weights)}")
    if any(w < 1 for w in root_weights):
        raise ValueError("weights must be positive integers")
    mu: dict[str, int] = {}
    for i, v in enumerate(shape.leaf_order):
        mu[v] = int(root_weights[i])
    children = shape.children_map
    for j in range(shape.n, 0, -1):
        for v in shape.layers[j - 1]:
            mu[v] = sum(mu[c] for c in children[v])
    return WeightedCombType(shape=shape, weights=tuple(sorted(mu.items())))
