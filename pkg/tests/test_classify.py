import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arulayout import fixtures
from arulayout.classify import ARUClass, aru_class, canonical_slicing, find_windmill, is_one_sided, is_sliceable, slicing_tree
from arulayout.enumeration import enumerate_slicing_trees, random_tree_layout, tree_to_layout
from arulayout.errors import NongenericError
from arulayout.geometry import maximal_segments, mirror_x, transpose
from arulayout.trees import CanonicalNode, Leaf, Node, binarize, canonicalize, leaves, tree_from_dict, tree_to_dict


def _guillotine_brute(rects) -> bool:
    """Sliceable iff some full line through the region cuts no rect, recursively."""
    if len(rects) == 1:
        return True
    for lo, hi in (("x0", "x1"), ("y0", "y1")):
        a = min(getattr(r, lo) for r in rects)
        b = max(getattr(r, hi) for r in rects)
        for c in {getattr(r, lo) for r in rects} - {a}:
            if all(getattr(r, hi) <= c or getattr(r, lo) >= c for r in rects):
                left = [r for r in rects if getattr(r, hi) <= c]
                right = [r for r in rects if getattr(r, lo) >= c]
                return _guillotine_brute(left) and _guillotine_brute(right)
    return False


def _one_sided_brute(L) -> bool:
    """Every maximal segment equals a whole side of some rect."""
    sides = set()
    for r in L.rects:
        sides |= {("V", r.x0, r.y0, r.y1), ("V", r.x1, r.y0, r.y1), ("H", r.y0, r.x0, r.x1), ("H", r.y1, r.x0, r.x1)}
    return all((s.orientation, s.axis_coord, s.lo, s.hi) in sides for s in maximal_segments(L))


def test_stack_tree():
    t = slicing_tree(fixtures.stack3())
    assert isinstance(t, Node) and t.cut == "H"
    assert leaves(t) == ["r1", "r2", "r3"]


def test_pinwheel_is_not_sliceable():
    assert slicing_tree(fixtures.pinwheel()) is None


def test_nongeneric_is_refused():
    with pytest.raises(NongenericError):
        slicing_tree(fixtures.quadrants())


def test_windmills():
    w = find_windmill(fixtures.pinwheel())
    assert w is not None and w.center == "c"
    assert find_windmill(fixtures.pinwheel_cw()).chirality != w.chirality
    assert find_windmill(fixtures.ray_windmill()) is not None
    assert find_windmill(fixtures.stack3()) is None
    assert find_windmill(fixtures.brick()) is None


def test_one_sided_named():
    assert is_one_sided(fixtures.pinwheel())[0]
    ok, bad = is_one_sided(fixtures.brick())
    assert not ok and len(bad) == 1 and bad[0].orientation == "V"
    assert is_one_sided(fixtures.single()) == (True, [])


def test_aru_classes():
    assert aru_class(fixtures.stack3()) is ARUClass.STRONG
    assert aru_class(fixtures.brick()) is ARUClass.WEAK_ONLY
    assert aru_class(fixtures.pinwheel()) is ARUClass.NONE


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_layout_round_trip(n):
    for t in enumerate_slicing_trees(n):
        L = tree_to_layout(t)
        assert canonical_slicing(L) == t
        assert canonicalize(binarize(t)) == t


def test_noncanonical_node_is_refused():
    with pytest.raises(ValueError):
        CanonicalNode("H", (Leaf("a"), CanonicalNode("H", (Leaf("b"), Leaf("c")))))


def test_tree_dict_round_trip():
    t = CanonicalNode("V", (Leaf("a"), CanonicalNode("H", (Leaf("b"), Leaf("c")))))
    assert tree_from_dict(tree_to_dict(t)) == t
    b = binarize(t)
    assert tree_from_dict(tree_to_dict(b)) == b


def test_fixtures_agree_with_brute_force():
    for name, make in fixtures.NAMED.items():
        L = make()
        if not L.generic:
            continue
        assert is_sliceable(L) == _guillotine_brute(list(L.rects)), name
        assert is_one_sided(L)[0] == _one_sided_brute(L), name
        assert (find_windmill(L) is None) == is_sliceable(L), name


trees_6 = [t for n in range(2, 7) for t in enumerate_slicing_trees(n)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(trees_6), st.integers(0, 10**6))
def test_one_sided_matches_brute_force(tree, seed):
    L = random_tree_layout(tree, random.Random(seed))
    assert is_sliceable(L) and find_windmill(L) is None
    assert is_one_sided(L)[0] == _one_sided_brute(L)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(trees_6))
def test_classes_are_symmetric(tree):
    L = tree_to_layout(tree)
    for M in (mirror_x(L), transpose(L)):
        assert aru_class(M) is aru_class(L)


def test_nonsliceable_fixtures_stay_nonsliceable_under_symmetry():
    for make in (fixtures.pinwheel, fixtures.double_windmill, fixtures.ray_windmill):
        L = make()
        for M in (mirror_x(L), transpose(L)):
            assert not is_sliceable(M) and find_windmill(M) is not None
