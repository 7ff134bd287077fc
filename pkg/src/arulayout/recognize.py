"""Recognizing duals of one-sided sliceable layouts.

The recursion works on instances ``(G, C, P)``: a near-triangulation ``G``,
lower bounds ``C(v)`` on the number of bbox corners each rect must touch,
and ordered pairs ``(a, b)`` of rects that must sit at two ccw consecutive
corners.  A cut vertex is split off, otherwise a pivot (a rect spanning a
whole bbox side) is removed.  Every successful branch also returns a
symbolic layout piece, and the final layout is checked against the input
before it is returned.

``C`` and ``P`` are stored together as one corner pattern: the holders of
the four bbox corners in ccw order, ``None`` where unknown, up to
rotation.  ``C(v)`` is the number of slots holding ``v`` and ``P`` is the
set of adjacent known slots.  Separate pairs would forget that two of
them share a corner, which matters once a rect holds two corners.

Inside the recursion the graph is a light snapshot: the ccw rotation
restricted to the live vertices plus the ccw outer walk.  In a
near-triangulation the cut vertices are exactly the vertices that repeat
on the outer walk, which keeps each step cheap.
"""

from __future__ import annotations

import sys
import threading
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from .classify import is_one_sided, slicing_tree
from .dualgraph import PlaneGraph, _cyclic_equal, _rect_rotation, is_near_triangulation
from .errors import (
    CutVertexError,
    InternalVerificationError,
    InvalidInputError,
    MoreThanTwoComponents,
    NotCutVertexError,
    NotOuterError,
)
from .geometry import Layout, Rect, _contacts_unchecked, validate_layout
from .trees import CanonicalNode, Leaf

Vertex = Hashable
Pattern = tuple  # four slots, ccw, None where unknown


def _key(v) -> str:
    return str(v)


def _matches(corners: Sequence, pattern: Pattern | None) -> bool:
    """Whether the corner holders fit the pattern under some rotation."""
    if pattern is None:
        return True
    return any(
        all(p is None or corners[(t + r) % 4] == p for t, p in enumerate(pattern))
        for r in range(4)
    )


def pattern_from_pairs(pairs: Sequence[tuple]) -> Pattern | None:
    """Chain pairs like ``(a, b), (b, c)`` into one pattern ``(a, b, c, None)``.

    Raises ValueError when they do not chain.
    """
    pairs = list(pairs)
    if not pairs:
        return None
    slots: list = [None] * 4
    slots[0], slots[1] = pairs[0]
    end = 1
    for a, b in pairs[1:]:
        if slots[end] != a or end == 3:
            raise ValueError("pairs do not chain into one corner pattern")
        end += 1
        slots[end] = b
    return tuple(slots)


@dataclass(frozen=True)
class Instance:
    """An instance ``(G, C, P)``.

    ``rotation`` and ``walk`` describe ``G`` (ccw neighbor lists and the ccw
    outer walk); ``pattern`` carries ``C`` and ``P`` as described in the
    module docstring.
    """

    rotation: Mapping[Vertex, tuple]
    walk: tuple
    pattern: Pattern | None = None

    @classmethod
    def from_graph(cls, g: PlaneGraph, pattern: Pattern | None = None) -> "Instance":
        if pattern is not None:
            pattern = tuple(pattern)
            if len(pattern) != 4:
                raise ValueError("a corner pattern has four slots")
            if all(p is None for p in pattern):
                pattern = None
        return cls(dict(g.rotation), tuple(g.outer_face), pattern)

    @property
    def graph(self) -> PlaneGraph:
        return PlaneGraph(tuple(self.rotation), self.rotation, self.walk)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def corner_count(self) -> dict:
        if self.pattern is None:
            return {}
        return dict(Counter(p for p in self.pattern if p is not None))

    @property
    def corner_pairs(self) -> tuple:
        q = self.pattern
        if q is None:
            return ()
        return tuple(
            (q[i], q[(i + 1) % 4]) for i in range(4) if q[i] is not None and q[(i + 1) % 4] is not None
        )

    def C(self, v) -> int:
        return 0 if self.pattern is None else self.pattern.count(v)

    @property
    def total_count(self) -> int:
        return 0 if self.pattern is None else sum(p is not None for p in self.pattern)

    @property
    def K(self) -> set:
        return set(self.corner_count)


def _cw_between(rot: tuple, u, w) -> list:
    """Neighbors strictly between ``u`` and ``w`` going clockwise from ``u``."""
    d = len(rot)
    i = rot.index(u)
    out = []
    for t in range(1, d):
        x = rot[(i - t) % d]
        if x == w:
            break
        out.append(x)
    return out


def _dedupe_cyclic(walk: list) -> tuple:
    out = [x for i, x in enumerate(walk) if i == 0 or x != walk[i - 1]]
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def _drop(rotation: Mapping, v, keep=None) -> dict:
    """Rotation of ``G - v`` (optionally restricted to ``keep``)."""
    if keep is None:
        rot = dict(rotation)
        del rot[v]
    else:
        rot = {x: rotation[x] for x in keep}
    for u in rotation[v]:
        if u in rot:
            r = rot[u]
            i = r.index(v)
            rot[u] = r[:i] + r[i + 1:]
    return rot


def _ccw_path_interior(walk: tuple, a, b) -> list:
    """Vertices strictly inside the shortest ccw walk segment from a to b."""
    if a == b:
        return []
    pos_a = [i for i, x in enumerate(walk) if x == a]
    pos_b = [i for i, x in enumerate(walk) if x == b]
    if not pos_a or not pos_b:
        return []
    m = len(walk)
    d, i = min(((j - i) % m, i) for i in pos_a for j in pos_b)
    return [walk[(i + t) % m] for t in range(1, d)]


def cut_vertices_of(inst: Instance) -> list:
    """Vertices repeated on the outer walk, in walk order."""
    if inst.n < 3:
        return []
    counts = Counter(inst.walk)
    return [v for v in dict.fromkeys(inst.walk) if counts[v] > 1]


def _remove_patterns(inst: Instance, v, u, w) -> list:
    q = inst.pattern
    if q is None:
        return [(u, w, None, None)]
    out = []
    for i in range(4):
        slots = (i, (i + 1) % 4)
        if any(q[t] not in (v, None) for t in slots):
            continue
        if any(q[t] == v for t in range(4) if t not in slots):
            continue
        new = list(q)
        new[slots[0]], new[slots[1]] = u, w
        if tuple(new) not in out:
            out.append(tuple(new))
    return out


def remove_options(inst: Instance, v) -> list[Instance]:
    """Every instance ``Remove(G, C, P; v)`` can produce.

    Usually there is exactly one.  The pattern slots ``v`` occupies go to
    ``u`` and ``w``, the first and last neighbors of ``v`` in cw order.
    An empty list means ``v`` cannot be the pivot.
    """
    if v not in inst.rotation:
        raise KeyError(v)
    if inst.n < 2:
        raise ValueError("nothing left after removing the only vertex")
    if v not in inst.walk:
        raise NotOuterError(f"{v!r} is not on the outer face")
    if inst.n >= 3 and inst.walk.count(v) > 1:
        raise CutVertexError(f"{v!r} is a cut vertex")
    walk = inst.walk
    i = walk.index(v)
    u, w = walk[i - 1], walk[(i + 1) % len(walk)]
    # a pivot holds a whole side, so it cannot sit between two corners
    for a, b in inst.corner_pairs:
        if v in _ccw_path_interior(walk, a, b):
            return []
    patterns = _remove_patterns(inst, v, u, w)
    if not patterns:
        return []
    xs = _cw_between(inst.rotation[v], u, w) if u != w else []
    new_walk = _dedupe_cyclic(list(walk[:i]) + xs + list(walk[i + 1:]))
    rot = _drop(inst.rotation, v)
    return [Instance(rot, new_walk, q) for q in patterns]


def remove_instance(inst: Instance, v) -> Instance | None:
    """``Remove(G, C, P; v)``, or None if ``v`` cannot be the pivot."""
    opts = remove_options(inst, v)
    return opts[0] if opts else None


def _split_ends(walk: tuple, v) -> tuple[tuple, tuple]:
    """``(u, w)`` for each side of a cut vertex occurring twice on the walk.

    The first side is the one entered right after the first occurrence.
    """
    i, j = [k for k, x in enumerate(walk) if x == v]
    return (walk[j - 1], walk[i + 1]), (walk[i - 1], walk[(j + 1) % len(walk)])


def _two_sides(rotation, v, seed_a, seed_b) -> tuple[set, bool]:
    """Grow both components of ``G - v`` in lockstep; return the smaller.

    The flag tells whether the returned set is the one containing
    ``seed_a``.
    """
    sides = [({seed_a}, deque([seed_a])), ({seed_b}, deque([seed_b]))]
    while True:
        for idx, (seen, queue) in enumerate(sides):
            if not queue:
                return seen, idx == 0
            x = queue.popleft()
            for y in rotation[x]:
                if y != v and y not in seen:
                    seen.add(y)
                    queue.append(y)


def _split_patterns(inst: Instance, v, ends, member_a) -> list:
    """Child patterns for each way the parent's corners can be shared out.

    Side a ends up above ``r_v`` with ``(u_a, w_a)`` at its bottom corners,
    side b below with ``(u_b, w_b)`` at its top corners.
    """
    (u_a, w_a), (u_b, w_b) = ends
    q = inst.pattern
    if q is None:
        return [((u_a, w_a, None, None), (None, None, u_b, w_b))]
    if v in q:
        return []
    out = []
    for r in range(4):
        h = [q[(c - r) % 4] for c in range(4)]  # holder of parent corner c
        if any(x is not None and member_a(x) for x in h[:2]):
            continue
        if any(x is not None and not member_a(x) for x in h[2:]):
            continue
        pair = ((u_a, w_a, h[2], h[3]), (h[0], h[1], u_b, w_b))
        if pair not in out:
            out.append(pair)
    return out


def split_options(inst: Instance, v) -> list[tuple[Instance, Instance]]:
    """Every pair of instances ``Split(G, C, P; v)`` can produce.

    The first instance of each pair is the component entered right after
    the first occurrence of ``v`` on the outer walk.  An empty list means
    the instance is unrealizable: a rect that cuts the bbox in two holds no
    corner.
    """
    walk = inst.walk
    occ = [i for i, x in enumerate(walk) if x == v]
    if len(occ) < 2 or inst.n < 3:
        raise NotCutVertexError(f"{v!r} is not a cut vertex")
    if len(occ) > 2:
        raise MoreThanTwoComponents(f"removing {v!r} leaves {len(occ)} components")
    i, j = occ
    ends = _split_ends(walk, v)
    (u_a, w_a), (u_b, w_b) = ends
    small, small_is_a = _two_sides(inst.rotation, v, w_a, w_b)

    def member_a(x):
        return (x in small) == small_is_a

    patterns = _split_patterns(inst, v, ends, member_a)
    if not patterns:
        return []
    rot_small = _drop(inst.rotation, v, small)
    rot_big = _drop(inst.rotation, v)
    for x in small:
        del rot_big[x]
    rot_a, rot_b = (rot_small, rot_big) if small_is_a else (rot_big, rot_small)
    seg_a = list(walk[i + 1:j]) + (_cw_between(inst.rotation[v], u_a, w_a) if u_a != w_a else [])
    seg_b = list(walk[j + 1:]) + list(walk[:i])
    seg_b += _cw_between(inst.rotation[v], u_b, w_b) if u_b != w_b else []
    walk_a, walk_b = _dedupe_cyclic(seg_a), _dedupe_cyclic(seg_b)
    return [(Instance(rot_a, walk_a, qa), Instance(rot_b, walk_b, qb)) for qa, qb in patterns]


def split_instance(inst: Instance, v) -> tuple[Instance, Instance] | None:
    """``Split(G, C, P; v)``, or None when the instance is unrealizable."""
    opts = split_options(inst, v)
    return opts[0] if opts else None


# -- symbolic layout pieces -------------------------------------------------
#
# A piece is a slicing tree node seen after ``k`` quarter turns ccw.
# ``corners`` lists the vertices at its bbox corners ccw from bottom-left.


@dataclass(frozen=True)
class Piece:
    node: tuple  # ("leaf", v) or (cut, (piece, ...))
    k: int
    corners: tuple

    def turned(self, r: int) -> "Piece":
        r %= 4
        c = self.corners
        return Piece(self.node, (self.k + r) % 4, tuple(c[(j - r) % 4] for j in range(4)))


def _leaf(v) -> Piece:
    return Piece(("leaf", v), 0, (v, v, v, v))


def _pair_sides(corners: tuple, a, b) -> list[int]:
    return [i for i in range(4) if corners[i] == a and corners[(i + 1) % 4] == b]


def _undo_remove(sub: Piece, v, u, w, inst: Instance) -> Piece | None:
    s = sub.corners
    for i in _pair_sides(s, u, w):
        if i == 0:
            node = ("H", (_leaf(v), sub))
        elif i == 1:
            node = ("V", (sub, _leaf(v)))
        elif i == 2:
            node = ("H", (sub, _leaf(v)))
        else:
            node = ("V", (_leaf(v), sub))
        corners = tuple(v if j in (i, (i + 1) % 4) else s[j] for j in range(4))
        if _matches(corners, inst.pattern):
            return Piece(node, 0, corners)
    return None


def _undo_split(top: Piece, bottom: Piece, v, ends, inst: Instance) -> Piece | None:
    (u_a, w_a), (u_b, w_b) = ends
    for i_top in _pair_sides(top.corners, u_a, w_a):
        hi = top.turned(-i_top)
        for i_bot in _pair_sides(bottom.corners, u_b, w_b):
            lo = bottom.turned(2 - i_bot)
            corners = (lo.corners[0], lo.corners[1], hi.corners[2], hi.corners[3])
            if _matches(corners, inst.pattern):
                return Piece(("H", (lo, _leaf(v), hi)), 0, corners)
    return None


_TURN = {
    # (cut, k) -> (effective cut, reverse children)
    ("H", 0): ("H", False),
    ("H", 1): ("V", True),
    ("H", 2): ("H", True),
    ("H", 3): ("V", False),
    ("V", 0): ("V", False),
    ("V", 1): ("H", False),
    ("V", 2): ("V", True),
    ("V", 3): ("H", True),
}


def piece_tree(piece: Piece):
    """The multiway slicing tree a piece stands for, in its own frame."""
    built: dict = {}
    stack = [(piece, 0, False)]
    while stack:
        p, turn, ready = stack.pop()
        k = (p.k + turn) % 4
        if p.node[0] == "leaf":
            built[id(p)] = Leaf(_key(p.node[1]))
            continue
        cut, kids = p.node
        if not ready:
            stack.append((p, turn, True))
            stack.extend((c, k, False) for c in kids)
            continue
        eff, rev = _TURN[(cut, k)]
        parts = [built.pop(id(c)) for c in kids]
        if rev:
            parts.reverse()
        flat = []
        for t in parts:
            if isinstance(t, CanonicalNode) and t.cut == eff:
                flat.extend(t.children)
            else:
                flat.append(t)
        built[id(p)] = CanonicalNode(eff, tuple(flat))
    return built[id(piece)]


def integer_layout(tree) -> Layout:
    """Place a slicing tree on an integer grid with minimal extents.

    Each node needs as many columns as its vertical cuts require, and the
    slack goes to the last child.  Safe whenever every cut has a single
    rect on one side, as in recognizer output; other trees may come out
    nongeneric.
    """
    need: dict = {}
    stack = [(tree, False)]
    while stack:
        t, ready = stack.pop()
        if isinstance(t, Leaf):
            need[id(t)] = (1, 1)
            continue
        if not ready:
            stack.append((t, True))
            stack.extend((c, False) for c in t.children)
            continue
        ws = [need[id(c)][0] for c in t.children]
        hs = [need[id(c)][1] for c in t.children]
        need[id(t)] = (sum(ws), max(hs)) if t.cut == "V" else (max(ws), sum(hs))
    width, height = need[id(tree)]
    rects = []
    stack = [(tree, 0, 0, width, height)]
    while stack:
        t, x0, y0, x1, y1 = stack.pop()
        if isinstance(t, Leaf):
            rects.append(Rect(t.id, x0, y0, x1, y1))
            continue
        kids = t.children
        pos = x0 if t.cut == "V" else y0
        for idx, c in enumerate(kids):
            w, h = need[id(c)]
            last = idx == len(kids) - 1
            if t.cut == "V":
                nxt = x1 if last else pos + w
                stack.append((c, pos, y0, nxt, y1))
            else:
                nxt = y1 if last else pos + h
                stack.append((c, x0, pos, x1, nxt))
            pos = nxt
    return validate_layout(Rect("bbox", 0, 0, width, height), rects)


# -- the recursion ----------------------------------------------------------


@dataclass
class Stats:
    """Counters filled in by :func:`main_recognize` when passed ``stats``."""

    calls: int = 0
    splits: int = 0
    removes: int = 0
    branch: Counter = field(default_factory=Counter)
    # most (D) steps met on a single root-to-leaf path
    max_d_on_path: int = 0
    corner_totals_ok: bool = True


def _outer_order(inst: Instance) -> list:
    distinct = list(dict.fromkeys(inst.walk))
    start = min(range(len(distinct)), key=lambda i: _key(distinct[i]))
    return distinct[start:] + distinct[:start]


def _first_chord(inst: Instance):
    """A 2-cut: in a 2-connected near-triangulation, any chord of the outer cycle."""
    walk = inst.walk
    m = len(walk)
    if m < 4:
        return None
    pos = {x: i for i, x in enumerate(walk)}
    for x in sorted(walk, key=_key):
        for y in sorted(inst.rotation[x], key=_key):
            j = pos.get(y)
            if j is not None and (j - pos[x]) % m not in (1, m - 1):
                return (x, y)
    return None


def _try_remove(inst: Instance, v, stats, d_seen) -> Piece | None:
    if v not in inst.walk:
        return None
    walk = inst.walk
    i = walk.index(v)
    u, w = walk[i - 1], walk[(i + 1) % len(walk)]
    for sub in remove_options(inst, v):
        if stats is not None:
            stats.removes += 1
            if sub.total_count < max(2, inst.total_count):
                stats.corner_totals_ok = False
        piece = _main(sub, stats, d_seen)
        if piece is not None:
            piece = _undo_remove(piece, v, u, w, inst)
            if piece is not None:
                return piece
    return None


def _balanced_cut(inst: Instance, cuts: list):
    """The cut vertex whose two walk segments are closest in length."""
    m = len(inst.walk)
    first: dict = {}
    best, best_score = None, -1
    for i, x in enumerate(inst.walk):
        if x in first:
            gap = i - first[x] - 1
            score = min(gap, m - gap - 2)
            if score > best_score or (score == best_score and _key(x) < _key(best)):
                best, best_score = x, score
        else:
            first[x] = i
    return best if best is not None else cuts[0]


def _main(inst: Instance, stats: Stats | None, d_seen: int) -> Piece | None:
    if stats is not None:
        stats.calls += 1
        stats.max_d_on_path = max(stats.max_d_on_path, d_seen)
    if inst.n == 1:
        return _leaf(next(iter(inst.rotation)))
    counts = inst.corner_count
    if any(k > 2 for k in counts.values()):
        return None
    cuts = cut_vertices_of(inst)
    if cuts:
        if stats is not None:
            stats.branch["cut"] += 1
        walk_counts = Counter(inst.walk)
        if any(walk_counts[c] > 2 for c in cuts):
            return None
        v = _balanced_cut(inst, cuts)
        ends = _split_ends(inst.walk, v)
        for part_a, part_b in split_options(inst, v):
            if stats is not None:
                stats.splits += 1
                if min(part_a.total_count, part_b.total_count) < 2:
                    stats.corner_totals_ok = False
            top = _main(part_a, stats, d_seen)
            if top is None:
                continue
            bottom = _main(part_b, stats, d_seen)
            if bottom is None:
                continue
            piece = _undo_split(top, bottom, v, ends, inst)
            if piece is not None:
                return piece
        return None
    twos = sorted((x for x, k in counts.items() if k == 2), key=_key)
    if twos:
        if stats is not None:
            stats.branch["A"] += 1
        return _try_remove(inst, twos[0], stats, d_seen)
    K = set(counts)
    pairs = inst.corner_pairs
    if len(K) == 2 and len(pairs) == 1 and pairs[0][0] != pairs[0][1]:
        a, b = pairs[0]
        if stats is not None:
            stats.branch["B"] += 1
        for x in (a, b):
            piece = _try_remove(inst, x, stats, d_seen)
            if piece is not None:
                return piece
        for x in _first_chord(inst) or ():
            piece = _try_remove(inst, x, stats, d_seen)
            if piece is not None:
                return piece
        return None
    if len(K) == 3:
        if stats is not None:
            stats.branch["D"] += 1
        for x in sorted(K, key=_key):
            piece = _try_remove(inst, x, stats, d_seen + 1)
            if piece is not None:
                return piece
        return None
    if not K:
        if stats is not None:
            stats.branch["E"] += 1
        for x in _outer_order(inst):
            piece = _try_remove(inst, x, stats, d_seen)
            if piece is not None:
                return piece
        return None
    return None


@dataclass(frozen=True)
class CornerLabeledLayout:
    layout: Layout
    vertex_map: dict
    corner_rects: tuple

    @property
    def tree(self):
        return slicing_tree(self.layout)


@dataclass(frozen=True)
class Report:
    ok: bool
    problems: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_realization(cand: CornerLabeledLayout, inst: Instance) -> Report:
    """Check a candidate against the instance it claims to realize.

    Besides the adjacencies, the ccw neighbor order of every rect must
    match the rotation of ``G``.
    """
    problems = []
    layout = cand.layout
    vmap = cand.vertex_map
    ids = set(layout.ids)
    if set(vmap) != set(inst.rotation) or set(vmap.values()) != ids or len(set(vmap.values())) != len(vmap):
        return Report(False, ("vertex_map is not a bijection onto the rects",))
    if not layout.generic:
        return Report(False, ("layout is not generic",))
    adj = {rid: set() for rid in ids}
    for c in _contacts_unchecked(layout):
        adj[c.a].add(c.b)
        adj[c.b].add(c.a)
    for v, rot in inst.rotation.items():
        if adj[vmap[v]] != {vmap[u] for u in rot}:
            problems.append(f"neighbors of {v!r} differ")
            break
    else:
        got = _rect_rotation(layout, extended=False)
        for v, rot in inst.rotation.items():
            if not _cyclic_equal(got[vmap[v]], [vmap[u] for u in rot]):
                problems.append(f"neighbor order around {v!r} differs")
                break
    corner_ids = layout.corner_rects()
    if tuple(corner_ids) != tuple(cand.corner_rects):
        problems.append("corner_rects do not match the layout")
    for v, k in inst.corner_count.items():
        if sum(1 for c in corner_ids if c == vmap[v]) < k:
            problems.append(f"{v!r} touches fewer than {k} corners")
    for a, b in inst.corner_pairs:
        ra, rb = vmap[a], vmap[b]
        if not any(corner_ids[i] == ra and corner_ids[(i + 1) % 4] == rb for i in range(4)):
            problems.append(f"pair ({a!r}, {b!r}) is not on consecutive corners")
    if inst.pattern is not None and not problems:
        mapped = tuple(None if p is None else vmap[p] for p in inst.pattern)
        if not _matches(corner_ids, mapped):
            problems.append("corner pattern does not fit")
    if not problems:
        if slicing_tree(layout) is None:
            problems.append("layout is not sliceable")
        elif not is_one_sided(layout)[0]:
            problems.append("layout is not one-sided")
    return Report(not problems, tuple(problems))


def _deep(fn, *args):
    """Run ``fn`` in a thread with room for very deep recursion."""
    result: list = []
    error: list = []

    def target():
        try:
            result.append(fn(*args))
        except BaseException as exc:  # re-raised in the caller
            error.append(exc)

    old_limit = sys.getrecursionlimit()
    old_stack = threading.stack_size()
    sys.setrecursionlimit(max(old_limit, 50_000))
    threading.stack_size(512 * 1024 * 1024)
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if error:
        raise error[0]
    return result[0]


def main_recognize(inst: Instance, stats: Stats | None = None) -> CornerLabeledLayout | None:
    """Run the recursion; a found layout is verified before it is returned."""

    def run():
        piece = _main(inst, stats, 0)
        if piece is None:
            return None
        layout = integer_layout(piece_tree(piece))
        vmap = {v: _key(v) for v in inst.rotation}
        cand = CornerLabeledLayout(layout, vmap, layout.corner_rects())
        rep = verify_realization(cand, inst)
        if not rep:
            raise InternalVerificationError("; ".join(rep.problems))
        return cand

    if inst.n > 200:
        return _deep(run)
    return run()


def recognize_dual(g: PlaneGraph, stats: Stats | None = None) -> CornerLabeledLayout | None:
    """A one-sided sliceable layout whose dual is ``g``, or None."""
    if not isinstance(g, PlaneGraph):
        raise InvalidInputError("expected a PlaneGraph")
    if not is_near_triangulation(g):
        raise InvalidInputError("graph is not a near-triangulation")
    if len({_key(v) for v in g.vertices}) != g.n:
        raise InvalidInputError("vertex labels collide as strings")
    return main_recognize(Instance.from_graph(g), stats)
