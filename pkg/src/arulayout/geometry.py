"""Exact-rational rectangular layouts and their segment/contact structure.

Coordinates are :class:`fractions.Fraction` values throughout; nothing in the
core ever touches a float.  Orientation tags are ``"H"`` (horizontal) and
``"V"`` (vertical).  A vertical contact is a left/right contact across a
vertical line; a horizontal contact is a below/above contact.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .errors import CoverageError, DuplicateIdError, NongenericError, OverlapError

Orientation = Literal["H", "V"]
Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose; they would silently break the equality
    tests that genericity and contact detection depend on.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class Rect:
    id: str
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "y0", "x1", "y1"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"rect {self.id!r} has empty interior")

    @property
    def width(self) -> Fraction:
        return self.x1 - self.x0

    @property
    def height(self) -> Fraction:
        return self.y1 - self.y0

    @property
    def aspect(self) -> Fraction:
        """Height over width."""
        return self.height / self.width

    @property
    def area(self) -> Fraction:
        return self.width * self.height

    def corners(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Corners in ccw order starting bottom-left."""
        return (
            (self.x0, self.y0),
            (self.x1, self.y0),
            (self.x1, self.y1),
            (self.x0, self.y1),
        )

    def contains_rect(self, other: "Rect") -> bool:
        return (
            self.x0 <= other.x0
            and other.x1 <= self.x1
            and self.y0 <= other.y0
            and other.y1 <= self.y1
        )


@dataclass(frozen=True)
class Layout:
    """A bounding box subdivided into rectangles.

    Build instances through :func:`validate_layout`; the constructor itself
    trusts its arguments.
    """

    bbox: Rect
    rects: tuple[Rect, ...]
    generic: bool
    _by_id: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {r.id: r for r in self.rects})

    def __len__(self) -> int:
        return len(self.rects)

    def __getitem__(self, rid: str) -> Rect:
        return self._by_id[rid]

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.rects)

    def ratios(self) -> dict[str, Fraction]:
        return {r.id: r.aspect for r in self.rects}

    def corner_rects(self) -> tuple[str, str, str, str]:
        """Ids of the rects at the bbox corners, ccw from bottom-left."""
        out = []
        for cx, cy in self.bbox.corners():
            for r in self.rects:
                if (r.x0 == cx or r.x1 == cx) and (r.y0 == cy or r.y1 == cy):
                    out.append(r.id)
                    break
        return tuple(out)


@dataclass(frozen=True)
class MaximalSegment:
    orientation: Orientation
    axis_coord: Fraction
    lo: Fraction
    hi: Fraction
    # (rect id, lo, hi) triples, sorted along the segment
    left_or_below_sides: tuple[tuple[str, Fraction, Fraction], ...]
    right_or_above_sides: tuple[tuple[str, Fraction, Fraction], ...]

    @property
    def span(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)

    def endpoints(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        if self.orientation == "V":
            return (self.axis_coord, self.lo), (self.axis_coord, self.hi)
        return (self.lo, self.axis_coord), (self.hi, self.axis_coord)

    def is_side_of_some_rect(self) -> bool:
        for side in (self.left_or_below_sides, self.right_or_above_sides):
            if len(side) == 1:
                return True
        return False


@dataclass(frozen=True)
class Contact:
    """``a`` is left of (V) or below (H) ``b``."""

    a: str
    b: str
    orientation: Orientation
    overlap: tuple[Fraction, Fraction]

    def key(self) -> tuple[str, str, Orientation]:
        return (self.a, self.b, self.orientation)


def validate_layout(bbox: Rect, rects: Sequence[Rect]) -> Layout:
    """Check that ``rects`` tile ``bbox`` and return the :class:`Layout`.

    Raises OverlapError, CoverageError or DuplicateIdError.  The ``generic``
    flag is computed: it is false iff some point is a corner of four rects.
    """
    rects = tuple(rects)
    if not rects:
        raise CoverageError("a layout needs at least one rectangle")
    seen = set()
    for r in rects:
        if r.id in seen:
            raise DuplicateIdError(f"duplicate rect id {r.id!r}")
        seen.add(r.id)
        if not bbox.contains_rect(r):
            raise CoverageError(f"rect {r.id!r} leaves the bounding box")
    _check_disjoint(rects)
    if sum((r.area for r in rects), Fraction(0)) != bbox.area:
        raise CoverageError("rectangles do not cover the bounding box")
    return Layout(bbox=bbox, rects=rects, generic=_is_generic(rects))


def _check_disjoint(rects: Sequence[Rect]) -> None:
    # sweep in x; active y-intervals kept sorted and pairwise disjoint
    events = []
    for r in rects:
        events.append((r.x1, 0, r))
        events.append((r.x0, 1, r))
    events.sort(key=lambda e: (e[0], e[1]))
    starts: list[Fraction] = []
    active: list[Rect] = []
    for _, kind, r in events:
        if kind == 0:
            i = bisect.bisect_left(starts, r.y0)
            while active[i] is not r:
                i += 1
            del starts[i]
            del active[i]
            continue
        i = bisect.bisect_left(starts, r.y0)
        if i < len(active) and active[i].y0 < r.y1:
            raise OverlapError(f"rects {r.id!r} and {active[i].id!r} overlap")
        if i > 0 and active[i - 1].y1 > r.y0:
            raise OverlapError(f"rects {r.id!r} and {active[i - 1].id!r} overlap")
        starts.insert(i, r.y0)
        active.insert(i, r)


def _is_generic(rects: Iterable[Rect]) -> bool:
    count: dict = defaultdict(int)
    for r in rects:
        for p in r.corners():
            count[p] += 1
            if count[p] == 4:
                return False
    return True


def make_layout(bbox, rects) -> Layout:
    """Convenience constructor from plain tuples.

    ``bbox`` is ``(x0, y0, x1, y1)`` and ``rects`` maps ids to such tuples.
    """
    box = Rect("bbox", *bbox)
    items = rects.items() if isinstance(rects, dict) else rects
    return validate_layout(box, [Rect(rid, *coords) for rid, coords in items])


def _segments_unchecked(layout: Layout) -> list[MaximalSegment]:
    bbox = layout.bbox
    lows: dict = {"V": defaultdict(list), "H": defaultdict(list)}
    highs: dict = {"V": defaultdict(list), "H": defaultdict(list)}
    for r in layout.rects:
        if r.x1 != bbox.x1:
            lows["V"][r.x1].append((r.id, r.y0, r.y1))
        if r.x0 != bbox.x0:
            highs["V"][r.x0].append((r.id, r.y0, r.y1))
        if r.y1 != bbox.y1:
            lows["H"][r.y1].append((r.id, r.x0, r.x1))
        if r.y0 != bbox.y0:
            highs["H"][r.y0].append((r.id, r.x0, r.x1))
    out = []
    for orient in ("V", "H"):
        for coord in sorted(lows[orient]):
            low = sorted(lows[orient][coord], key=lambda t: t[1])
            high = sorted(highs[orient][coord], key=lambda t: t[1])
            out.extend(_merge_sides(orient, coord, low, high))
    return out


def _merge_sides(orient, coord, low, high) -> list[MaximalSegment]:
    # both sides cover the same union of intervals; split it into components
    segs = []
    i = j = 0
    while i < len(low):
        lo, hi = low[i][1], low[i][2]
        a, b = [low[i]], []
        i += 1
        while True:
            if i < len(low) and low[i][1] <= hi:
                hi = max(hi, low[i][2])
                a.append(low[i])
                i += 1
            elif j < len(high) and high[j][1] <= hi:
                hi = max(hi, high[j][2])
                b.append(high[j])
                j += 1
            else:
                break
        lo = min(lo, b[0][1]) if b else lo
        segs.append(MaximalSegment(orient, coord, lo, hi, tuple(a), tuple(b)))
    return segs


def maximal_segments(layout: Layout) -> list[MaximalSegment]:
    """Inclusion-maximal inner segments, vertical ones first, by coordinate.

    A generic layout with n rects has exactly n - 1 of them.
    """
    if not layout.generic:
        raise NongenericError("segment sides are ambiguous at a cross")
    return _segments_unchecked(layout)


def _contacts_unchecked(layout: Layout) -> list[Contact]:
    out = []
    for seg in _segments_unchecked(layout):
        low, high = seg.left_or_below_sides, seg.right_or_above_sides
        i = j = 0
        while i < len(low) and j < len(high):
            lo = max(low[i][1], high[j][1])
            hi = min(low[i][2], high[j][2])
            if lo < hi:
                out.append(Contact(low[i][0], high[j][0], seg.orientation, (lo, hi)))
            if low[i][2] < high[j][2]:
                i += 1
            else:
                j += 1
    return out


def contacts(layout: Layout) -> list[Contact]:
    """One contact per pair of rects sharing a positive-length boundary piece.

    Point contacts never count.
    """
    if not layout.generic:
        raise NongenericError("contacts of a nongeneric layout are not analyzed")
    return _contacts_unchecked(layout)


def normalize(layout: Layout) -> Layout:
    """Translate the bbox to the origin and scale it to width 1."""
    b = layout.bbox
    s = 1 / b.width

    def tr(r: Rect) -> Rect:
        return Rect(r.id, (r.x0 - b.x0) * s, (r.y0 - b.y0) * s, (r.x1 - b.x0) * s, (r.y1 - b.y0) * s)

    return Layout(tr(b), tuple(tr(r) for r in layout.rects), layout.generic)


def affine_map(layout: Layout, target: Rect) -> Layout:
    """Stretch ``layout`` so that its bbox becomes ``target``."""
    b = layout.bbox
    sx = target.width / b.width
    sy = target.height / b.height

    def tr(r: Rect) -> Rect:
        return Rect(
            r.id,
            target.x0 + (r.x0 - b.x0) * sx,
            target.y0 + (r.y0 - b.y0) * sy,
            target.x0 + (r.x1 - b.x0) * sx,
            target.y0 + (r.y1 - b.y0) * sy,
        )

    return Layout(Rect(target.id, target.x0, target.y0, target.x1, target.y1),
                  tuple(tr(r) for r in layout.rects), layout.generic)


def mirror_x(layout: Layout) -> Layout:
    """Reflect left-right (x -> -x)."""

    def tr(r: Rect) -> Rect:
        return Rect(r.id, -r.x1, r.y0, -r.x0, r.y1)

    return Layout(tr(layout.bbox), tuple(tr(r) for r in layout.rects), layout.generic)


def transpose(layout: Layout) -> Layout:
    """Swap the x and y axes."""

    def tr(r: Rect) -> Rect:
        return Rect(r.id, r.y0, r.x0, r.y1, r.x1)

    return Layout(tr(layout.bbox), tuple(tr(r) for r in layout.rects), layout.generic)


def sublayout(layout: Layout, box: Rect) -> Layout:
    """The rects of ``layout`` inside ``box``, as a layout of their own."""
    inner = [r for r in layout.rects if box.contains_rect(r)]
    return validate_layout(Rect("bbox", box.x0, box.y0, box.x1, box.y1), inner)
