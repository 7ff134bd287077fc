"""Small named layouts used by the demos, the CLI tests and the catalogs."""

from __future__ import annotations

from fractions import Fraction as F

from .geometry import Layout, Rect, make_layout, validate_layout
from .classify import is_sliceable


def single() -> Layout:
    return make_layout((0, 0, 1, 1), {"r1": (0, 0, 1, 1)})


def vertical_split() -> Layout:
    return make_layout((0, 0, 1, 1), {"r1": (0, 0, F(1, 2), 1), "r2": (F(1, 2), 0, 1, 1)})


def stack3() -> Layout:
    """Three rects stacked bottom to top."""
    return make_layout(
        (0, 0, 1, 1),
        {"r1": (0, 0, 1, F(1, 3)), "r2": (0, F(1, 3), 1, F(2, 3)), "r3": (0, F(2, 3), 1, 1)},
    )


def quadrants() -> Layout:
    """Four quadrants meeting in a cross (nongeneric)."""
    h = F(1, 2)
    return make_layout(
        (0, 0, 1, 1),
        {"a": (0, 0, h, h), "b": (h, 0, 1, h), "c": (h, h, 1, 1), "d": (0, h, h, 1)},
    )


def brick() -> Layout:
    """Two columns cut at different heights; the left cut is the higher one.

    Left column: r2 below r1.  Right column: r4 below r3.  r1 and r4 do not
    touch.
    """
    h = F(1, 2)
    return make_layout(
        (0, 0, 1, 1),
        {
            "r1": (0, F(2, 3), h, 1),
            "r2": (0, 0, h, F(2, 3)),
            "r3": (h, F(1, 3), 1, 1),
            "r4": (h, 0, 1, F(1, 3)),
        },
    )


def pinwheel() -> Layout:
    """Counterclockwise pinwheel: the top arm runs west past the center.

    r1 top, r2 left, r3 bottom, r4 right; a side of each r_i strictly
    contains a side of r_(i+1).
    """
    return make_layout(
        (0, 0, 3, 3),
        {
            "c": (1, 1, 2, 2),
            "r1": (0, 2, 2, 3),
            "r2": (0, 0, 1, 2),
            "r3": (1, 0, 3, 1),
            "r4": (2, 1, 3, 3),
        },
    )


def pinwheel_cw() -> Layout:
    """Mirror image of :func:`pinwheel`."""
    return make_layout(
        (0, 0, 3, 3),
        {
            "c": (1, 1, 2, 2),
            "r1": (1, 2, 3, 3),
            "r2": (2, 0, 3, 2),
            "r3": (0, 0, 2, 1),
            "r4": (0, 1, 1, 3),
        },
    )


def pinwheel_split_center() -> Layout:
    """Pinwheel whose center is cut into two stacked rects (reducible)."""
    return make_layout(
        (0, 0, 3, 3),
        {
            "c1": (1, 1, 2, F(3, 2)),
            "c2": (1, F(3, 2), 2, 2),
            "r1": (0, 2, 2, 3),
            "r2": (0, 0, 1, 2),
            "r3": (1, 0, 3, 1),
            "r4": (2, 1, 3, 3),
        },
    )


def double_windmill() -> Layout:
    """A pinwheel nested inside the center of another pinwheel.

    The inner ring ``c, t, l, b, r`` fills ``[1, 5]^2`` and is a proper
    sublayout, so the whole layout is reducible.
    """
    return make_layout(
        (0, 0, 6, 6),
        {
            "c": (2, 2, 4, 4),
            "t": (1, 4, 4, 5),
            "l": (1, 1, 2, 4),
            "b": (2, 1, 5, 2),
            "r": (4, 2, 5, 5),
            "a1": (0, 5, 5, 6),
            "a2": (0, 0, 1, 5),
            "a3": (1, 0, 6, 1),
            "a4": (5, 1, 6, 6),
        },
    )


def pinwheel_family_6() -> list[Layout]:
    """Non-sliceable 6-rect layouts: the pinwheels with one rect halved."""
    out = []
    for base in (pinwheel(), pinwheel_cw()):
        for r in base.rects:
            for cut in ("H", "V"):
                rest = [q for q in base.rects if q.id != r.id]
                if cut == "H":
                    m = (r.y0 + r.y1) / 2
                    parts = [Rect(r.id + "a", r.x0, r.y0, r.x1, m), Rect(r.id + "b", r.x0, m, r.x1, r.y1)]
                else:
                    m = (r.x0 + r.x1) / 2
                    parts = [Rect(r.id + "a", r.x0, r.y0, m, r.y1), Rect(r.id + "b", m, r.y0, r.x1, r.y1)]
                lay = validate_layout(base.bbox, rest + parts)
                if lay.generic and not is_sliceable(lay):
                    out.append(lay)
    return out


NAMED = {
    "single": single,
    "vertical_split": vertical_split,
    "stack3": stack3,
    "brick": brick,
    "pinwheel": pinwheel,
    "pinwheel_cw": pinwheel_cw,
    "pinwheel_split_center": pinwheel_split_center,
    "double_windmill": double_windmill,
}


def ray_windmill() -> Layout:
    """Irreducible clockwise windmill around r5 whose rays cut two rects.

    The bottom arm stops on the right side of r1, so its ray cuts r1
    horizontally; the left arm stops under r8, so its ray cuts r8
    vertically.  No proper subset of the rects tiles a rectangle.
    """
    return make_layout(
        (0, 0, 6, 6),
        {
            "r1": (0, 0, 2, 5),
            "r2": (2, 0, 4, 3),
            "r3": (4, 0, 6, 4),
            "r4": (2, 3, 3, 5),
            "r5": (3, 3, 4, 4),
            "r6": (3, 4, 5, 5),
            "r7": (5, 4, 6, 6),
            "r8": (0, 5, 5, 6),
        },
    )


NAMED["ray_windmill"] = ray_windmill
