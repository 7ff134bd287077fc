import math
import random

import pytest

from arulayout import fixtures
from arulayout.classify import canonical_slicing, is_one_sided
from arulayout.dualgraph import dual, plane_isomorphic
from arulayout.enumeration import (
    census,
    dual_catalog,
    enumerate_slicing_trees,
    min_vertex_cut,
    random_tree_layout,
    tree_to_layout,
)
from arulayout.errors import CapError
from arulayout.geometry import contacts
from arulayout.transversal import flip_closure_size
from arulayout.trees import CanonicalNode, Leaf

from conftest import one_sided_count, path_graph, sliceable_count, triangle, wheel5


def test_tiny_tree_counts():
    assert len(enumerate_slicing_trees(1)) == 1
    assert {t.cut for t in enumerate_slicing_trees(2)} == {"H", "V"}
    assert len(enumerate_slicing_trees(3)) == 6


def test_cap():
    with pytest.raises(CapError):
        enumerate_slicing_trees(9)
    assert len(enumerate_slicing_trees(3, cap=3)) == 6


def test_instantiation():
    L = tree_to_layout(Leaf("r1"))
    assert (L.bbox.width, L.bbox.height) == (1, 1)
    L = tree_to_layout(CanonicalNode("H", (Leaf("a"), Leaf("b"), Leaf("c"))))
    assert L["a"].y1 * 3 == 1 and L["b"].y1 * 3 == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_sliceable_counts(n):
    assert census(n).sliceable == sliceable_count(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_one_sided_counts(n):
    assert census(n).one_sided_sliceable == one_sided_count(n)


def test_three_rects_are_all_one_sided():
    c = census(3)
    assert (c.sliceable, c.one_sided_sliceable) == (6, 6)


@pytest.mark.parametrize("n", range(1, 6))
def test_distinct_trees_give_distinct_layouts(n):
    seen = set()
    for t in enumerate_slicing_trees(n):
        key = frozenset(c.key() for c in contacts(tree_to_layout(t)))
        assert key not in seen
        seen.add(key)


@pytest.mark.parametrize("n", range(1, 6))
def test_random_instantiation_keeps_the_tree(n):
    rng = random.Random(n)
    for t in enumerate_slicing_trees(n):
        L, M = tree_to_layout(t), random_tree_layout(t, rng)
        assert canonical_slicing(M) == t
        if is_one_sided(L)[0]:
            assert {c.key() for c in contacts(M)} == {c.key() for c in contacts(L)}


@pytest.mark.parametrize("n", range(1, 6))
def test_unique_structure_iff_one_sided(n):
    for t in enumerate_slicing_trees(n):
        L = tree_to_layout(t)
        assert (flip_closure_size(L) == 1) == is_one_sided(L)[0]


def test_catalog_small():
    pos, neg = dual_catalog(2)
    assert len(pos) == 1 and pos[0].edge_count() == 1 and neg == []
    pos, _ = dual_catalog(3)
    assert any(plane_isomorphic(g, path_graph(3)) for g in pos)
    assert any(plane_isomorphic(g, triangle()) for g in pos)
    pos, _ = dual_catalog(5)
    assert any(plane_isomorphic(g, wheel5()) for g in pos)


def test_catalog_sizes_match_census():
    for n in range(1, 7):
        assert len(dual_catalog(n)[0]) == census(n).dual_iso_classes


def test_min_vertex_cut():
    assert min_vertex_cut(path_graph(3)) == 1
    assert min_vertex_cut(wheel5()) == 3
    assert min_vertex_cut(triangle()) == math.inf


@pytest.mark.parametrize("n", range(4, 7))
def test_positive_duals_have_small_cuts(n):
    for g in dual_catalog(n)[0]:
        assert min_vertex_cut(g) <= 3


def test_pinwheel_duals_are_negative_or_positive_consistently():
    # the 5-wheel has a sliceable one-sided layout, so the pinwheel never lands in the negatives
    _, neg = dual_catalog(5)
    assert not any(plane_isomorphic(g, dual(fixtures.pinwheel())) for g in neg)
