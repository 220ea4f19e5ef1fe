import time
from itertools import permutations, product

import pytest

from tangentia.trees import (
    CombType,
    enumerate_types,
    propagate_weights,
    relabel_leaves,
    validate,
)

# ---------------------------------------------------------------------------
# independent counting oracle: chains in the partition lattice, generated
# from restricted growth strings and counted top-down (the implementation
# builds bottom-up from block merges, so the two share no code path)
# ---------------------------------------------------------------------------

def _rgs_partitions(r):
    """All set partitions of {1..r} as frozensets of frozensets."""
    results = []

    def grow(prefix, used):
        if len(prefix) == r:
            blocks = {}
            for index, value in enumerate(prefix, start=1):
                blocks.setdefault(value, set()).add(index)
            results.append(frozenset(frozenset(b) for b in blocks.values()))
            return
        for value in range(used + 1):
            grow(prefix + [value], max(used, value + 1))

    grow([], 0)
    return results


def _strictly_refines(fine, coarse):
    if len(fine) <= len(coarse):
        return False
    return all(any(block <= c for c in coarse) for block in fine)


def _oracle_count(n, r):
    partitions = _rgs_partitions(r)
    discrete = frozenset(frozenset({i}) for i in range(1, r + 1))
    total = frozenset({frozenset(range(1, r + 1))})
    memo = {}

    def chains_down(part, steps):
        if steps == 0:
            return 1 if part == discrete else 0
        key = (part, steps)
        if key not in memo:
            memo[key] = sum(
                chains_down(finer, steps - 1)
                for finer in partitions
                if _strictly_refines(finer, part)
            )
        return memo[key]

    return chains_down(total, n)


def test_counts_against_oracle():
    for n in range(0, 5):
        for r in range(1, 5):
            assert len(enumerate_types(n, r)) == _oracle_count(n, r), (n, r)


def test_frozen_counts():
    assert len(enumerate_types(0, 1)) == 1
    assert all(len(enumerate_types(n, 1)) == 0 for n in (1, 2, 3, 4))
    assert len(enumerate_types(1, 2)) == 1
    assert all(len(enumerate_types(n, 2)) == 0 for n in (0, 2, 3, 4))
    assert len(enumerate_types(2, 3)) == 3
    assert len(enumerate_types(1, 3)) == 1
    assert len(enumerate_types(2, 4)) == 13
    assert len(enumerate_types(3, 4)) == 18


def test_two_three_matches_middle_partition_count():
    # for n = 2 a type is determined by one partition strictly between the
    # discrete and total ones; for r = 3 those are the three 2-block splits
    middles = [
        p for p in _rgs_partitions(3)
        if len(p) not in (1, 3)
    ]
    assert len(middles) == 3
    assert len(enumerate_types(2, 3)) == len(middles)


def test_enumerated_types_are_valid_and_canonical():
    for n in range(0, 4):
        for r in range(1, 5):
            types = enumerate_types(n, r)
            assert len(set(types)) == len(types)
            for shape in types:
                assert validate(shape) == []
                rebuilt = CombType.from_partition_chain(shape.partition_chain())
                assert rebuilt == shape
    assert enumerate_types(2, 3) == enumerate_types(2, 3)  # deterministic


def test_trivial_type_shape():
    only = enumerate_types(0, 1)[0]
    assert only.layers == (("1:0",),)
    assert only.leaf_order == ("1:0",)
    assert only.parents == ()


def test_leaf_permutation_closure():
    for n in range(0, 4):
        for r in range(1, 5):
            types = set(enumerate_types(n, r))
            for shape in types:
                for perm in permutations(range(1, r + 1)):
                    mapping = dict(zip(range(1, r + 1), perm))
                    assert relabel_leaves(shape, mapping) in types


def test_relabel_rejects_non_permutations():
    shape = enumerate_types(2, 3)[0]
    with pytest.raises(ValueError):
        relabel_leaves(shape, {1: 1, 2: 2, 3: 5})


def test_budget_guard():
    with pytest.raises(ValueError):
        enumerate_types(7, 2)
    with pytest.raises(ValueError):
        enumerate_types(2, 7)
    with pytest.raises(ValueError):
        enumerate_types(-1, 2)
    with pytest.raises(ValueError):
        enumerate_types(1, 0)


def test_large_enumeration_is_quick():
    start = time.monotonic()
    types = enumerate_types(4, 5)
    assert len(types) == 180
    assert time.monotonic() - start < 10.0


def test_weight_propagation_conserves_totals():
    for n in range(0, 4):
        for r in range(1, 5):
            for shape in enumerate_types(n, r):
                for weights in product(range(1, 6), repeat=r):
                    weighted = propagate_weights(shape, weights)
                    assert weighted.top_weight == sum(weights)
                    # every interior vertex carries the sum of its children
                    children = shape.children_map
                    for layer in shape.layers[:-1]:
                        for v in layer:
                            assert weighted.weight(v) == sum(
                                weighted.weight(c) for c in children[v]
                            )


def test_weight_propagation_input_checks():
    shape = enumerate_types(2, 3)[0]
    with pytest.raises(ValueError):
        propagate_weights(shape, [1, 2])  # wrong arity
    with pytest.raises(ValueError):
        propagate_weights(shape, [1, 2, 0])  # weights must be positive


def test_validate_axiom_one():
    # bottom labels not in bijection with the bottom layer
    broken = CombType(
        n=1,
        r=2,
        layers=(("1:0",), ("2:0", "2:1")),
        parents=(("2:0", "1:0"), ("2:1", "1:0")),
        leaf_order=("2:0", "2:0"),
    )
    assert validate(broken) == [1]


def test_validate_axiom_two():
    # middle vertex with no children
    broken = CombType(
        n=2,
        r=1,
        layers=(("1:0",), ("2:0", "2:1"), ("3:0",)),
        parents=(("2:0", "1:0"), ("2:1", "1:0"), ("3:0", "2:0")),
        leaf_order=("3:0",),
    )
    assert 2 in validate(broken)
    # parent link that skips a layer
    skipping = CombType(
        n=2,
        r=2,
        layers=(("1:0",), ("2:0",), ("3:0", "3:1")),
        parents=(("2:0", "1:0"), ("3:0", "2:0"), ("3:1", "1:0")),
        leaf_order=("3:0", "3:1"),
    )
    assert 2 in validate(skipping)


def test_validate_axiom_three():
    # a chain never branches, so every non-bottom layer fails condition (3)
    chain = CombType(
        n=1,
        r=1,
        layers=(("1:0",), ("2:0",)),
        parents=(("2:0", "1:0"),),
        leaf_order=("2:0",),
    )
    assert validate(chain) == [3]


def test_validate_passes_on_hand_built_type():
    shape = CombType(
        n=1,
        r=2,
        layers=(("1:0",), ("2:0", "2:1")),
        parents=(("2:0", "1:0"), ("2:1", "1:0")),
        leaf_order=("2:0", "2:1"),
    )
    assert validate(shape) == []
    assert shape in enumerate_types(1, 2)


def test_constructor_rejects_malformed_structures():
    with pytest.raises(ValueError):
        CombType(n=1, r=1, layers=(("1:0",),), parents=(), leaf_order=("1:0",))
    with pytest.raises(ValueError):
        CombType(
            n=1, r=1,
            layers=(("v", ), ("v",)),  # duplicate id
            parents=(), leaf_order=("v",),
        )
    with pytest.raises(ValueError):
        CombType(
            n=1, r=1,
            layers=(("1:0",), ("2:0",)),
            parents=(("2:0", "ghost"),),
            leaf_order=("2:0",),
        )
