"""Exact realization of aspect ratio assignments for sliceable layouts.

An assignment maps rect ids to positive rationals (height over width).  A
slicing tree and an assignment determine the realizing layout uniquely up
to scaling and translation, so realize-and-compare decides strong
realizability exactly.  The two witness generators build assignments that
no equivalent layout realizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .classify import Windmill, _decompose, canonical_slicing, find_windmill, is_one_sided, slicing_tree
from .errors import InternalVerificationError, NongenericError, NotSliceableError
from .geometry import (
    Contact,
    Layout,
    Rect,
    _contacts_unchecked,
    affine_map,
    maximal_segments,
    as_rational,
    mirror_x,
    transpose,
    validate_layout,
)
from .trees import CanonicalNode, Leaf, Node, canonicalize, leaves

Assignment = Mapping[str, Fraction]


def as_assignment(ratios: Mapping) -> dict[str, Fraction]:
    out = {}
    for k, v in ratios.items():
        q = as_rational(v)
        if q <= 0:
            raise ValueError(f"aspect ratio of {k!r} must be positive")
        out[k] = q
    return out


def _children(t):
    if isinstance(t, Node):
        return (t.first, t.second)
    return t.children


def _ratios(tree, alpha) -> dict:
    """Aspect ratio of every subtree's bounding box, keyed by id()."""
    rho = {}
    stack = [(tree, False)]
    while stack:
        t, ready = stack.pop()
        if isinstance(t, Leaf):
            rho[id(t)] = alpha[t.id]
            continue
        if not ready:
            stack.append((t, True))
            stack.extend((c, False) for c in _children(t))
            continue
        kids = [rho[id(c)] for c in _children(t)]
        if t.cut == "H":
            rho[id(t)] = sum(kids, Fraction(0))
        else:
            rho[id(t)] = 1 / sum((1 / k for k in kids), Fraction(0))
    return rho


def realize_sliceable(tree, alpha: Assignment) -> Layout:
    """The unique layout of ``tree`` realizing ``alpha``, with width 1.

    Works for binary and multiway trees alike; the result may be nongeneric.
    """
    alpha = as_assignment(alpha)
    missing = [i for i in leaves(tree) if i not in alpha]
    if missing:
        raise KeyError(f"no aspect ratio for {missing[0]!r}")
    rho = _ratios(tree, alpha)
    height = rho[id(tree)]
    rects = []
    stack = [(tree, Fraction(0), Fraction(0), Fraction(1), height)]
    while stack:
        t, x0, y0, x1, y1 = stack.pop()
        if isinstance(t, Leaf):
            rects.append(Rect(t.id, x0, y0, x1, y1))
            continue
        if t.cut == "V":
            h = y1 - y0
            x = x0
            kids = _children(t)
            for i, c in enumerate(kids):
                nx = x1 if i == len(kids) - 1 else x + h / rho[id(c)]
                stack.append((c, x, y0, nx, y1))
                x = nx
        else:
            w = x1 - x0
            y = y0
            kids = _children(t)
            for i, c in enumerate(kids):
                ny = y1 if i == len(kids) - 1 else y + w * rho[id(c)]
                stack.append((c, x0, y, x1, ny))
                y = ny
    return validate_layout(Rect("bbox", 0, 0, 1, height), rects)


@dataclass(frozen=True)
class RealizationReport:
    layout: Layout
    mode: str
    equivalent: bool
    generic: bool
    gained: tuple[Contact, ...] = ()
    lost: tuple[Contact, ...] = ()

    @property
    def contact_diffs(self) -> list[tuple[str, Contact]]:
        return [("gained", c) for c in self.gained] + [("lost", c) for c in self.lost]


def _contact_map(layout: Layout) -> dict:
    out = {}
    for c in _contacts_unchecked(layout):
        a, b = sorted((c.a, c.b))
        out[(a, b, c.orientation)] = c
    return out


def _labeled_canonical(layout: Layout):
    tree = _decompose(list(layout.rects))
    return None if tree is None else canonicalize(tree)


def strong_realizability(layout: Layout, alpha: Assignment, mode: str = "strong") -> RealizationReport:
    """Realize ``alpha`` on the slicing tree of ``layout`` and compare.

    In strong mode the realization must be generic with the same oriented
    contacts.  In weak mode it must keep the same labeled canonical slicing
    tree; a nongeneric realization (a cross) still counts there and is
    flagged through ``generic``.
    """
    if mode not in ("strong", "weak"):
        raise ValueError(f"unknown mode {mode!r}")
    tree = slicing_tree(layout)
    if tree is None:
        raise NotSliceableError("layout has no slicing tree")
    out = realize_sliceable(tree, alpha)
    before, after = _contact_map(layout), _contact_map(out)
    gained = tuple(after[k] for k in sorted(after.keys() - before.keys()))
    lost = tuple(before[k] for k in sorted(before.keys() - after.keys()))
    if mode == "strong":
        equivalent = out.generic and not gained and not lost
    else:
        equivalent = _labeled_canonical(out) == canonicalize(canonical_slicing(layout))
    return RealizationReport(out, mode, equivalent, out.generic, gained, lost)


def _region(layout: Layout, ids) -> Rect:
    rs = [layout[i] for i in ids]
    return Rect("region", min(r.x0 for r in rs), min(r.y0 for r in rs), max(r.x1 for r in rs), max(r.y1 for r in rs))


def region_ratios(layout: Layout, ids, target: Fraction) -> dict[str, Fraction]:
    """Leaf ratios after stretching the region spanned by ``ids`` to ``target``.

    The region must be a sublayout; feeding these ratios back through its
    slicing tree gives a bounding box of aspect ratio ``target``.
    """
    box = _region(layout, ids)
    sub = Layout(box, tuple(layout[i] for i in ids), True)
    goal = Rect("goal", 0, 0, 1, as_rational(target))
    return {r.id: r.aspect for r in affine_map(sub, goal).rects}


def _beside(tree, coord: Fraction, layout: Layout):
    """Pairs of adjacent children of V nodes separated by the line x = coord."""
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Leaf):
            continue
        if t.cut == "V":
            for a, b in zip(t.children, t.children[1:]):
                if _region(layout, leaves(a)).x1 == coord:
                    yield a, b
        stack.extend(t.children)


def _brick_vertical(layout: Layout, seg) -> dict[str, Fraction] | None:
    tree = canonical_slicing(layout)
    for a, b in _beside(tree, seg.axis_coord, layout):
        ra, rb = _region(layout, leaves(a)), _region(layout, leaves(b))
        if not (ra.y0 <= seg.lo and seg.hi <= ra.y1 and rb.y0 <= seg.lo and seg.hi <= rb.y1):
            continue
        if isinstance(a, Leaf) or isinstance(b, Leaf):
            return None
        a_lo, a_hi = leaves(a.children[0]), [i for c in a.children[1:] for i in leaves(c)]
        b_lo, b_hi = leaves(b.children[0]), [i for c in b.children[1:] for i in leaves(c)]
        y_left = _region(layout, a_lo).y1
        y_right = _region(layout, b_lo).y1
        if y_left > y_right:
            targets = ((a_lo, 1), (a_hi, 2), (b_lo, 2), (b_hi, 1))
        else:
            targets = ((a_lo, 2), (a_hi, 1), (b_lo, 1), (b_hi, 2))
        alpha = layout.ratios()
        for ids, t in targets:
            alpha.update(region_ratios(layout, ids, Fraction(t)))
        return alpha
    return None


def brick_witness(layout: Layout) -> dict[str, Fraction] | None:
    """An assignment no strongly equivalent layout realizes, or None if one-sided.

    A maximal segment that is no rect's side separates two columns (or
    rows) that are each cut again; their lowest cuts frame a brick.  The
    four brick regions get ratios 2, 1, 1, 2 arranged so that the two cuts
    swap heights, and every other rect keeps its ratio.
    """
    if slicing_tree(layout) is None:
        raise NotSliceableError("brick witnesses need a sliceable layout")
    ok, bad = is_one_sided(layout)
    if ok:
        return None
    seg = bad[0]
    if seg.orientation == "V":
        out = _brick_vertical(layout, seg)
    else:
        flipped = transpose(layout)
        seg_t = next(
            s for s in maximal_segments(flipped)
            if s.orientation == "V" and s.axis_coord == seg.axis_coord and s.lo == seg.lo
        )
        out = _brick_vertical(flipped, seg_t)
        if out is not None:
            out = {k: 1 / v for k, v in out.items()}
    if out is None:
        raise InternalVerificationError("no brick found beside a two-sided segment")
    return out


@dataclass(frozen=True)
class WindmillWitness:
    """Details behind a windmill witness assignment.

    ``reduced`` is the irreducible layout the quadrant rule was applied to
    (collapsed blocks carry ids starting with ``#``), ``blocks`` maps those
    ids to the original rects they stand for, and ``classes`` records the
    quadrant of each reduced rect: ``"center"``, ``"Q1"`` .. ``"Q4"``,
    ``"split-H"`` or ``"split-V"``.
    """

    ratios: dict
    reduced: Layout
    windmill: Windmill
    blocks: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)


def _sublayout_boxes(rects) -> list[tuple[Rect, list]]:
    """Every box tiled by two or more of ``rects``, with its rects."""
    out = []
    seen = set()
    for a in rects:
        for b in rects:
            if a.x0 >= b.x1 or a.y0 >= b.y1:
                continue
            key = (a.x0, a.y0, b.x1, b.y1)
            if key in seen:
                continue
            seen.add(key)
            box = Rect("box", *key)
            inside = [r for r in rects if box.contains_rect(r)]
            if len(inside) < 2:
                continue
            if sum((r.area for r in inside), Fraction(0)) == box.area:
                out.append((box, inside))
    return out


def reduce_nonsliceable(layout: Layout) -> tuple[Layout, dict]:
    """A minimal nonsliceable sublayout with its maximal proper sublayouts collapsed.

    Returns the reduced layout and a map from each collapsed block id to the
    rect ids it replaces.
    """
    boxes = _sublayout_boxes(layout.rects)
    bad = [(box, rs) for box, rs in boxes if _decompose(rs) is None]
    if not bad:
        raise NotSliceableError("layout is sliceable")
    bad.sort(key=lambda t: (len(t[1]), t[0].x0, t[0].y0, t[0].x1, t[0].y1))
    top_box, top_rects = bad[0]
    inner = [(box, rs) for box, rs in _sublayout_boxes(top_rects) if len(rs) < len(top_rects)]
    inner.sort(key=lambda t: (-len(t[1]), t[0].x0, t[0].y0, t[0].x1, t[0].y1))
    chosen: list = []
    for box, rs in inner:
        if any(box.x0 < c.x1 and c.x0 < box.x1 and box.y0 < c.y1 and c.y0 < box.y1 for c, _ in chosen):
            continue
        chosen.append((box, rs))
    blocks = {}
    used = set()
    rects = []
    for k, (box, rs) in enumerate(chosen):
        bid = f"#block{k}"
        blocks[bid] = [r.id for r in rs]
        used.update(blocks[bid])
        rects.append(Rect(bid, box.x0, box.y0, box.x1, box.y1))
    rects.extend(r for r in top_rects if r.id not in used)
    return validate_layout(Rect("bbox", top_box.x0, top_box.y0, top_box.x1, top_box.y1), rects), blocks


def quadrant_classes(layout: Layout, w: Windmill) -> dict[str, str]:
    """Quadrant of each rect around a clockwise windmill.

    Q1 is top right and the rest follow counterclockwise.  Rays leave the
    arms' far ends: the top one east, the right one south, the bottom one
    west and the left one north.
    """
    if w.chirality != "clockwise":
        raise ValueError("mirror counterclockwise windmills first")
    c = w.center_box
    x0, y0, x1, y1 = c.x0, c.y0, c.x1, c.y1
    out = {}
    for r in layout.rects:
        if c.contains_rect(r):
            out[r.id] = "center"
        elif (r.y0 < y1 < r.y1 and r.x0 >= x1) or (r.y0 < y0 < r.y1 and r.x1 <= x0):
            out[r.id] = "split-H"
        elif (r.x0 < x1 < r.x1 and r.y1 <= y0) or (r.x0 < x0 < r.x1 and r.y0 >= y1):
            out[r.id] = "split-V"
        elif r.x0 >= x0 and r.y0 >= y1:
            out[r.id] = "Q1"
        elif r.x1 <= x0 and r.y0 >= y0:
            out[r.id] = "Q2"
        elif r.x1 <= x1 and r.y1 <= y0:
            out[r.id] = "Q3"
        elif r.x0 >= x1 and r.y1 <= y1:
            out[r.id] = "Q4"
        else:
            raise InternalVerificationError(f"rect {r.id!r} fits no quadrant")
    return out


def windmill_witness_details(layout: Layout) -> WindmillWitness | None:
    if not layout.generic:
        raise NongenericError("windmill witnesses need a generic layout")
    if _decompose(list(layout.rects)) is not None:
        return None
    reduced, blocks = reduce_nonsliceable(layout)
    w = find_windmill(reduced)
    if w is None:
        raise InternalVerificationError("nonsliceable layout without a windmill")
    work, ww = reduced, w
    if w.chirality == "counterclockwise":
        work = mirror_x(reduced)
        ww = find_windmill(work)
    classes = quadrant_classes(work, ww)
    n = len(reduced)
    tall, flat = Fraction(6 * n), Fraction(1, 6 * n * n)
    value = {
        "center": Fraction(1),
        "Q1": tall,
        "Q3": tall,
        "Q2": flat,
        "Q4": flat,
        "split-H": tall + flat,
        "split-V": 1 / (1 / tall + 1 / flat),
    }
    ratios = layout.ratios()
    for rid, cls in classes.items():
        if rid in blocks:
            ratios.update(region_ratios(layout, blocks[rid], value[cls]))
        else:
            ratios[rid] = value[cls]
    return WindmillWitness(ratios, reduced, w, blocks, classes)


def windmill_witness(layout: Layout) -> dict[str, Fraction] | None:
    """Quadrant assignment around a windmill, or None for sliceable layouts.

    The quadrant rule runs on an irreducible core: a minimal nonsliceable
    sublayout with its maximal proper sublayouts collapsed to single rects.
    Collapsed blocks get their ratio by stretching, rects outside the core
    keep theirs.
    """
    d = windmill_witness_details(layout)
    return None if d is None else d.ratios


def witness(layout: Layout) -> tuple[str, dict] | None:
    """The brick or windmill witness, whichever applies."""
    if _decompose(list(layout.rects)) is None:
        return ("windmill", windmill_witness(layout))
    out = brick_witness(layout)
    return None if out is None else ("brick", out)

