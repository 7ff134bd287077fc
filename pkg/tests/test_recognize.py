import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arulayout import fixtures
from arulayout.classify import is_one_sided
from arulayout.dualgraph import PlaneGraph, dual, find_isomorphism, graph_invariant
from arulayout.enumeration import dual_catalog, enumerate_slicing_trees, random_tree_layout, tree_to_layout
from arulayout.errors import InvalidInputError, NotCutVertexError
from arulayout.geometry import Rect, mirror_x, validate_layout
from arulayout.recognize import (
    CornerLabeledLayout,
    Instance,
    Stats,
    recognize_dual,
    remove_options,
    split_options,
    verify_realization,
)

from conftest import bowtie, path_graph, triangle, wheel5
from strategies import random_tree


def _as_multiset(pattern):
    return sorted(p for p in pattern if p is not None)


def test_split_bowtie():
    (a, b), = split_options(Instance.from_graph(bowtie()), "v")
    for part, ends in ((a, {"c", "d"}), (b, {"a", "b"})):
        assert set(part.rotation) == ends
        assert all(part.C(x) == 1 for x in ends)
        (pair,) = part.corner_pairs
        assert set(pair) == ends


def test_split_path():
    (a, b), = split_options(Instance.from_graph(path_graph(3)), "r2")
    assert (a.n, a.C("r3")) == (1, 2)
    assert (b.n, b.C("r1")) == (1, 2)
    assert a.corner_pairs == (("r3", "r3"),) and b.corner_pairs == (("r1", "r1"),)


def test_split_needs_cut_vertex():
    with pytest.raises(NotCutVertexError):
        split_options(Instance.from_graph(triangle()), "a")


def test_remove_from_triangle():
    (child,) = remove_options(Instance.from_graph(triangle()), "c")
    assert set(child.rotation) == {"a", "b"}
    assert child.C("a") == child.C("b") == 1
    assert {frozenset(p) for p in child.corner_pairs} == {frozenset("ab")}


def test_remove_from_edge():
    g = PlaneGraph("uw", {"u": ("w",), "w": ("u",)}, "uw")
    (child,) = remove_options(Instance.from_graph(g, ("u", "w", None, None)), "u")
    assert child.n == 1 and child.C("w") == 3


def test_remove_prunes_vertex_inside_pair_path():
    # path a-b-c on the outer walk of the triangle: b sits between a and c
    inst = Instance.from_graph(triangle(), ("a", "c", None, None))
    assert remove_options(inst, "b") == []


def test_small_graphs_recognized():
    one = PlaneGraph(["x"], {"x": ()}, ["x"])
    L = recognize_dual(one).layout
    assert len(L) == 1 and L.bbox.width == L.bbox.height
    found = recognize_dual(path_graph(3))
    assert found is not None
    rs = found.layout.rects
    # a stack of three, in either direction
    assert len({(r.x0, r.x1) for r in rs}) == 1 or len({(r.y0, r.y1) for r in rs}) == 1
    assert recognize_dual(triangle()) is not None


def test_wheel_is_recognized():
    found = recognize_dual(wheel5())
    assert found is not None
    assert is_one_sided(found.layout)[0]


def test_verify_catches_bad_candidates():
    g = triangle()
    inst = Instance.from_graph(g)
    cand = recognize_dual(g)
    assert verify_realization(cand, inst)
    v = next(v for v, r in cand.vertex_map.items() if cand.corner_rects.count(r) == 1)
    demand = Instance.from_graph(g, (v, v, v, None))
    rep = verify_realization(cand, demand)
    assert not rep and any("corners" in p for p in rep.problems)
    partial = dict(cand.vertex_map)
    partial.pop(v)
    assert not verify_realization(CornerLabeledLayout(cand.layout, partial, cand.corner_rects), inst)


def test_rejects_bad_input():
    square = PlaneGraph("abcd", {"a": ("b", "d"), "b": ("c", "a"), "c": ("d", "b"), "d": ("a", "c")}, "abcd")
    with pytest.raises(InvalidInputError):
        recognize_dual(square)
    with pytest.raises(InvalidInputError):
        recognize_dual("not a graph")


@pytest.mark.parametrize("n", range(1, 8))
def test_catalog_oracle(n):
    positive, negative = dual_catalog(n)
    for g in positive:
        found = recognize_dual(g)
        assert found is not None
        assert verify_realization(found, Instance.from_graph(g))
    for g in negative:
        assert recognize_dual(g) is None


def _one_sided_classes(n):
    out = {}
    for t in enumerate_slicing_trees(n):
        L = tree_to_layout(t)
        if is_one_sided(L)[0]:
            g = dual(L)
            out.setdefault(graph_invariant(g), []).append(g.adjacency())
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_every_enumerated_dual_and_its_mirror(n):
    # the answer depends on the abstract graph alone; a mirror flips the embedding
    classes = _one_sided_classes(n)
    for t in enumerate_slicing_trees(n):
        for L in (tree_to_layout(t), mirror_x(tree_to_layout(t))):
            g = dual(L)
            expect = any(find_isomorphism(g.adjacency(), a) is not None for a in classes.get(graph_invariant(g), ()))
            assert (recognize_dual(g) is not None) == expect


def test_nonsliceable_fixture_duals():
    for name in ("pinwheel", "pinwheel_cw", "double_windmill", "ray_windmill"):
        L = fixtures.NAMED[name]()
        found = recognize_dual(dual(L))
        if found is not None:
            assert verify_realization(found, Instance.from_graph(dual(L)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10**9))
def test_random_one_sided_duals_are_recognized(n, seed):
    rng = random.Random(seed)
    for _ in range(50):
        L = random_tree_layout(random_tree(n, rng), rng)
        if is_one_sided(L)[0]:
            break
    else:
        return
    stats = Stats()
    found = recognize_dual(dual(L), stats)
    assert found is not None
    assert stats.max_d_on_path <= 1
    assert stats.corner_totals_ok
