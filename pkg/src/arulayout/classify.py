"""Sliceability, windmills, one-sidedness and the aspect-ratio-universal class."""

from __future__ import annotations

import enum
import sys
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .errors import NongenericError
from .geometry import Layout, MaximalSegment, Rect, maximal_segments
from .trees import CanonicalNode, Leaf, binarize


class ARUClass(str, enum.Enum):
    STRONG = "StronglyARU"
    WEAK_ONLY = "WeaklyARUOnly"
    NONE = "NotARU"


def _groups(rects: Sequence[Rect], cut: str, end) -> list[list[Rect]]:
    """Split ``rects`` along every full-length cut of the given orientation."""
    if cut == "V":
        lo, hi = (lambda r: r.x0), (lambda r: r.x1)
    else:
        lo, hi = (lambda r: r.y0), (lambda r: r.y1)
    ordered = sorted(rects, key=lo)
    groups = [[]]
    reach = None
    for r in ordered:
        if reach is not None and lo(r) == reach and reach != end:
            groups.append([])
        groups[-1].append(r)
        reach = hi(r) if reach is None else max(reach, hi(r))
    return groups


def _bounds(rects: Sequence[Rect]) -> Rect:
    return Rect(
        "region",
        min(r.x0 for r in rects),
        min(r.y0 for r in rects),
        max(r.x1 for r in rects),
        max(r.y1 for r in rects),
    )


def canonical_slicing(layout: Layout):
    """Multiway slicing tree with rect-id leaves, or None if not sliceable."""
    return _decompose(list(layout.rects))


def _decompose(rects):
    if len(rects) == 1:
        return Leaf(rects[0].id)
    box = _bounds(rects)
    for cut, end in (("V", box.x1), ("H", box.y1)):
        parts = _groups(rects, cut, end)
        if len(parts) > 1:
            kids = []
            for p in parts:
                sub = _decompose(p)
                if sub is None:
                    return None
                kids.append(sub)
            return CanonicalNode(cut, tuple(kids))
    return None


def slicing_tree(layout: Layout):
    """Binary slicing tree, or None when some region has no full slice.

    Vertical slices win over horizontal ones, and among parallel slices the
    one with the smallest coordinate splits first.
    """
    if not layout.generic:
        raise NongenericError("slicing analysis needs a generic layout")
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(layout) + 1000))
    try:
        tree = canonical_slicing(layout)
        return None if tree is None else binarize(tree)
    finally:
        sys.setrecursionlimit(limit)


def is_sliceable(layout: Layout) -> bool:
    return slicing_tree(layout) is not None


@dataclass(frozen=True)
class Windmill:
    """Four arms around a central region, listed top, left, bottom, right.

    ``center`` is the id of the central rect when the region is a single
    face.  The windmill is ``"clockwise"`` when its top arm runs past the
    top-right corner of the center.
    """

    center: str | None
    center_box: Rect
    arms: tuple[MaximalSegment, MaximalSegment, MaximalSegment, MaximalSegment]
    chirality: str


def _windmill_at(box: Rect, top, left, bottom, right) -> str | None:
    if None in (top, left, bottom, right):
        return None
    past = (
        (top.lo < box.x0, top.hi > box.x1),  # TL, TR
        (left.lo < box.y0, left.hi > box.y1),  # BL, TL
        (bottom.lo < box.x0, bottom.hi > box.x1),  # BL, BR
        (right.lo < box.y0, right.hi > box.y1),  # BR, TR
    )
    if any(a == b for a, b in past):
        return None
    t_tr, l_tl, b_bl, r_br = past[0][1], past[1][1], past[2][0], past[3][0]
    if t_tr and r_br and b_bl and l_tl:
        return "clockwise"
    if not (t_tr or r_br or b_bl or l_tl):
        return "counterclockwise"
    return None


def _segment_index(segments):
    index = {"H": defaultdict(list), "V": defaultdict(list)}
    for s in segments:
        index[s.orientation][s.axis_coord].append(s)
    return index


def _covering(index, orient, coord, lo, hi):
    for s in index[orient].get(coord, ()):
        if s.lo <= lo and hi <= s.hi:
            return s
    return None


def find_windmill(layout: Layout) -> Windmill | None:
    """Some windmill, preferring ones whose center is a single rect."""
    segments = maximal_segments(layout)
    index = _segment_index(segments)

    def probe(box: Rect, center):
        arms = (
            _covering(index, "H", box.y1, box.x0, box.x1),
            _covering(index, "V", box.x0, box.y0, box.y1),
            _covering(index, "H", box.y0, box.x0, box.x1),
            _covering(index, "V", box.x1, box.y0, box.y1),
        )
        chir = _windmill_at(box, *arms)
        return None if chir is None else Windmill(center, box, arms, chir)

    for r in layout.rects:
        w = probe(r, r.id)
        if w is not None:
            return w
    hs = [s for s in segments if s.orientation == "H"]
    vs = [s for s in segments if s.orientation == "V"]
    for bottom in hs:
        for top in hs:
            if top.axis_coord <= bottom.axis_coord:
                continue
            for left in vs:
                if not (left.lo <= bottom.axis_coord and top.axis_coord <= left.hi):
                    continue
                for right in vs:
                    if right.axis_coord <= left.axis_coord:
                        continue
                    box = Rect("center", left.axis_coord, bottom.axis_coord, right.axis_coord, top.axis_coord)
                    w = probe(box, None)
                    if w is not None:
                        return w
    return None


def is_one_sided(layout: Layout) -> tuple[bool, list[MaximalSegment]]:
    """Whether every maximal segment is a full side of some rect.

    Returns the flag and the list of offending segments.
    """
    bad = [s for s in maximal_segments(layout) if not s.is_side_of_some_rect()]
    return (not bad, bad)


def aru_class(layout: Layout) -> ARUClass:
    if not is_sliceable(layout):
        return ARUClass.NONE
    if is_one_sided(layout)[0]:
        return ARUClass.STRONG
    return ARUClass.WEAK_ONLY
