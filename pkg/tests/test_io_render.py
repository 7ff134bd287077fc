from fractions import Fraction as F

import pytest

from arulayout import fixtures, io
from arulayout.classify import find_windmill
from arulayout.dualgraph import dual
from arulayout.errors import CoverageError, InvalidInputError
from arulayout.render import RenderOptions, render_svg, segment_indices
from arulayout.trees import CanonicalNode, Leaf


@pytest.mark.parametrize("name", sorted(fixtures.NAMED))
def test_layout_round_trip(name):
    L = fixtures.NAMED[name]()
    assert io.layout_from_json(io.layout_to_json(L)) == L


def test_graph_and_tree_round_trip():
    g = dual(fixtures.pinwheel())
    h = io.graph_from_json(io.graph_to_json(g))
    assert h.rotation == g.rotation and h.outer_face == g.outer_face
    t = CanonicalNode("V", (Leaf("a"), Leaf("b")))
    assert io.tree_from_json(io.tree_to_json(t)) == t


def test_assignment_round_trip():
    alpha = {"a": F(3, 7), "b": F(2)}
    assert io.assignment_from_json(io.assignment_to_json(alpha)) == alpha
    with pytest.raises(InvalidInputError):
        io.assignment_from_json({"ratios": {"a": "-1"}})
    with pytest.raises(InvalidInputError):
        io.assignment_from_json({"ratios": {"a": 0.5}})


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"bbox": {"x0": 0, "y0": 0, "x1": 1, "y1": 1}, "rects": "x"},
        {"bbox": {"x0": 0, "y0": 0, "x1": 1, "y1": 1}, "rects": [{"x0": 0, "y0": 0, "x1": 1, "y1": 1}]},
    ],
)
def test_bad_layout_json(data):
    with pytest.raises(InvalidInputError):
        io.layout_from_json(data)


def test_gap_is_a_coverage_error():
    data = {"bbox": {"x0": 0, "y0": 0, "x1": 1, "y1": 1}, "rects": [{"id": "a", "x0": 0, "y0": 0, "x1": "1/2", "y1": 1}]}
    with pytest.raises(CoverageError):
        io.layout_from_json(data)


def test_unit_square_svg():
    svg = render_svg(fixtures.single())
    assert svg.count("<rect") == 1
    assert 'viewBox="0 0 400 400"' in svg


def test_pinwheel_with_arms():
    L = fixtures.pinwheel()
    arms = segment_indices(L, find_windmill(L).arms)
    svg = render_svg(L, RenderOptions(highlight=arms))
    assert svg.count("<rect") == 5 and svg.count("<line") == 4


def test_element_count_is_rects_plus_highlights():
    L = fixtures.brick()
    svg = render_svg(L, RenderOptions(label=False, highlight={"r1", "r3", 0}))
    assert svg.count("<rect") + svg.count("<polygon") + svg.count("<line") == len(L) + 3
    assert "<text" not in svg


def test_svg_is_deterministic():
    L = fixtures.ray_windmill()
    assert render_svg(L) == render_svg(L)


def test_width_floor():
    with pytest.raises(ValueError):
        RenderOptions(width_px=10)
