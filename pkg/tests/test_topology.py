"""Tree topologies: coverage bound, explicit builds, random generation."""

import numpy as np
import pytest

from plcmac import NetworkTree, Role, generate_tree, min_first_layer, single_layer, tree_from_parents
from plcmac.topology import CCO_ID


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (64, 6, 2),    # perfect power: float pow would give 1.9999...
        (1200, 6, 4),
        (650, 6, 3),
        (200, 6, 3),
        (50, 6, 2),
        (5, 1, 5),
        (1, 1, 1),
        (1, 6, 1),
    ],
)
def test_min_first_layer_is_the_integer_root_ceiling(n, k, expected):
    assert min_first_layer(n, k) == expected
    # defining property of ceil(n ** (1/k))
    m = min_first_layer(n, k)
    assert m**k >= n
    assert m == 1 or (m - 1) ** k < n


def test_min_first_layer_validation():
    with pytest.raises(ValueError):
        min_first_layer(0, 6)
    with pytest.raises(ValueError):
        min_first_layer(10, 0)


def test_single_layer_is_a_star():
    tree = single_layer(5)
    tree.validate(max_layers=6)
    assert tree.max_depth == 1
    assert tree.children[CCO_ID] == (1, 2, 3, 4, 5)
    assert all(tree.parent[i] == CCO_ID for i in range(1, 6))
    assert tree.role(CCO_ID) is Role.CCO
    assert tree.role(3) is Role.STA


def test_tree_from_parents_builds_layers_and_roles():
    tree = tree_from_parents({1: 0, 2: 0, 3: 1, 4: 1, 5: 3})
    tree.validate()
    assert tree.max_depth == 3
    assert tree.layers == ((0,), (1, 2), (3, 4), (5,))
    assert tree.children[1] == (3, 4)
    assert tree.role(1) is Role.PCO
    assert tree.role(3) is Role.PCO
    assert tree.role(2) is Role.STA
    assert tree.depth[5] == 3


def test_tree_from_parents_rejects_gappy_ids():
    with pytest.raises(ValueError):
        tree_from_parents({1: 0, 3: 1})


def test_edge_list_is_sorted_by_child():
    tree = tree_from_parents({1: 0, 2: 1, 3: 0})
    assert tree.to_edge_list() == "1 0 1\n2 1 2\n3 0 1"


def test_validate_catches_corrupt_depth():
    good = tree_from_parents({1: 0, 2: 1})
    broken = NetworkTree(
        n_sta=good.n_sta,
        parent=good.parent,
        depth={**good.depth, 2: 3},
        children=good.children,
        layers=good.layers,
        nodes=good.nodes,
    )
    with pytest.raises(ValueError):
        broken.validate()


def test_validate_catches_disagreeing_children_map():
    good = tree_from_parents({1: 0, 2: 1})
    broken = NetworkTree(
        n_sta=good.n_sta,
        parent=good.parent,
        depth=good.depth,
        children={0: (1, 2)},
        layers=good.layers,
        nodes=good.nodes,
    )
    with pytest.raises(ValueError):
        broken.validate()


def test_validate_enforces_the_depth_cap():
    tree = tree_from_parents({1: 0, 2: 0, 3: 1})
    tree.validate(max_layers=2)
    with pytest.raises(ValueError):
        tree.validate(max_layers=1)


def test_validate_enforces_the_first_layer_bound():
    # a bare chain cannot cover 3 STAs in 3 layers starting from 1 branch
    chain = tree_from_parents({1: 0, 2: 1, 3: 2})
    with pytest.raises(ValueError):
        chain.validate(max_layers=3)


def test_generated_trees_satisfy_all_invariants():
    for seed in range(25):
        rng = np.random.default_rng(seed)
        tree = generate_tree(60, 6, rng)
        tree.validate(max_layers=6)
        assert len(tree.layers[1]) >= min_first_layer(60, 6)
        assert tree.max_depth <= 6


def test_generation_is_deterministic_per_seed():
    a = generate_tree(40, 4, np.random.default_rng(123))
    b = generate_tree(40, 4, np.random.default_rng(123))
    assert a.to_edge_list() == b.to_edge_list()
    c = generate_tree(40, 4, np.random.default_rng(124))
    assert a.to_edge_list() != c.to_edge_list()


def test_generation_covers_deep_and_shallow_shapes():
    depths = {generate_tree(60, 6, np.random.default_rng(s)).max_depth for s in range(40)}
    assert 1 in depths      # shallow draws happen
    assert max(depths) > 2  # and so do genuinely deep ones


def test_generate_tree_validation():
    with pytest.raises(ValueError):
        generate_tree(0, 6, np.random.default_rng(0))
    with pytest.raises(ValueError):
        generate_tree(10, 0, np.random.default_rng(0))
