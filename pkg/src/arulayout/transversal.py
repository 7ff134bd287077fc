"""Transversal structures on extended duals, alternating 4-cycles and flips.

Red edges point upward (below -> above), blue edges point rightward
(left -> right).  Around an inner vertex the counterclockwise rotation reads
outgoing red, incoming blue, incoming red, outgoing blue: top neighbors,
then left, bottom and right ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .dualgraph import BOUNDARY, EAST, NORTH, SOUTH, WEST, ExtendedDual, extended_dual
from .errors import CapExceeded, InvalidCycleError, NongenericError
from .geometry import Layout, contacts

RED, BLUE = "red", "blue"

# (color, outgoing) of the four blocks in ccw order
_BLOCKS = ((RED, True), (BLUE, False), (RED, False), (BLUE, True))

_OUTER = {frozenset(p) for p in ((SOUTH, EAST), (EAST, NORTH), (NORTH, WEST), (WEST, SOUTH))}


def edge_key(u, v) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class TransversalStructure:
    """``labels`` maps each inner edge to ``(color, (tail, head))``."""

    dual: ExtendedDual
    labels: Mapping[frozenset, tuple]

    def color(self, u, v) -> str:
        return self.labels[edge_key(u, v)][0]

    def coloring(self) -> frozenset:
        """Hashable summary; the colors alone determine the orientations."""
        return frozenset((e, c) for e, (c, _) in self.labels.items())

    def to_json(self) -> list[dict]:
        out = []
        for e, (c, (t, h)) in self.labels.items():
            u, v = sorted(e, key=str)
            out.append({"u": u, "v": v, "color": c, "dir": "uv" if (t, h) == (u, v) else "vu"})
        out.sort(key=lambda d: (str(d["u"]), str(d["v"])))
        return out


def inner_edges(ed: ExtendedDual) -> list[frozenset]:
    return [edge_key(u, v) for u, v in ed.graph.edges() if edge_key(u, v) not in _OUTER]


def transversal_of(layout: Layout) -> TransversalStructure:
    """The structure read off the geometry of a generic layout."""
    if not layout.generic:
        raise NongenericError("transversal structure of a nongeneric layout")
    ed = extended_dual(layout)
    labels = {}
    for c in contacts(layout):
        labels[edge_key(c.a, c.b)] = (RED if c.orientation == "H" else BLUE, (c.a, c.b))
    b = layout.bbox
    for r in layout.rects:
        if r.y0 == b.y0:
            labels[edge_key(SOUTH, r.id)] = (RED, (SOUTH, r.id))
        if r.y1 == b.y1:
            labels[edge_key(r.id, NORTH)] = (RED, (r.id, NORTH))
        if r.x0 == b.x0:
            labels[edge_key(WEST, r.id)] = (BLUE, (WEST, r.id))
        if r.x1 == b.x1:
            labels[edge_key(r.id, EAST)] = (BLUE, (r.id, EAST))
    return TransversalStructure(ed, labels)


@dataclass(frozen=True)
class Report:
    ok: bool
    message: str = ""
    where: object = None

    def __bool__(self) -> bool:
        return self.ok


def _runs(seq: list) -> list[tuple]:
    """Maximal cyclic runs of equal values as (value, start index, length)."""
    n = len(seq)
    start = next((i for i in range(n) if seq[i] != seq[i - 1]), None)
    if start is None:
        return [(seq[0], 0, n)] if n else []
    runs = []
    for k in range(n):
        i = (start + k) % n
        if k and seq[i] == seq[i - 1]:
            value, first, length = runs[-1]
            runs[-1] = (value, first, length + 1)
        else:
            runs.append((seq[i], i, 1))
    return runs


def validate_ts(ts: TransversalStructure) -> Report:
    """Boundary conditions plus the four-block rule at every inner vertex."""
    g = ts.dual.graph
    for e in inner_edges(ts.dual):
        if e not in ts.labels:
            return Report(False, "unlabeled inner edge", tuple(e))
        c, (t, h) = ts.labels[e]
        if c not in (RED, BLUE) or {t, h} != set(e):
            return Report(False, "malformed label", tuple(e))
    for e in ts.labels:
        if e in _OUTER or len(e) != 2 or not all(v in g.rotation for v in e):
            return Report(False, "label on a non-inner edge", tuple(e))
    want = {SOUTH: (RED, True), WEST: (BLUE, True), NORTH: (RED, False), EAST: (BLUE, False)}
    for s, (color, out) in want.items():
        for u in g.rotation[s]:
            if u in BOUNDARY:
                continue
            c, (t, _) = ts.labels[edge_key(s, u)]
            if c != color or (t == s) != out:
                return Report(False, f"edge {s}-{u} breaks the boundary rule", s)
    for v in ts.dual.inner_vertices():
        kinds = []
        for u in g.rotation[v]:
            c, (t, _) = ts.labels[edge_key(u, v)]
            kinds.append((c, t == v))
        runs = _runs(kinds)
        if len(runs) != 4:
            return Report(False, f"vertex {v} has {len(runs)} blocks instead of 4", v)
        seq = [r[0] for r in runs]
        k = seq.index(_BLOCKS[0]) if _BLOCKS[0] in seq else None
        if k is None or seq[k:] + seq[:k] != list(_BLOCKS):
            return Report(False, f"blocks around {v} are out of order", v)
    return Report(True)


def orient(ed: ExtendedDual, colors: Mapping[frozenset, str]) -> dict | None:
    """Recover the orientations from a coloring, or None if inconsistent.

    Edges at S, W, N, E are oriented by the boundary rule; inside, every
    vertex has exactly four color runs, so one oriented edge fixes the rest.
    """
    g = ed.graph
    labels: dict = {}
    queue = deque()
    rule = {SOUTH: True, WEST: True, NORTH: False, EAST: False}
    for s, out in rule.items():
        for u in g.rotation[s]:
            if u in BOUNDARY:
                continue
            e = edge_key(s, u)
            labels[e] = (colors[e], (s, u) if out else (u, s))
            queue.append(u)
    done = set()
    while queue:
        v = queue.popleft()
        if v in done:
            continue
        rot = g.rotation[v]
        seq = [colors[edge_key(v, u)] for u in rot]
        runs = _runs(seq)
        if len(runs) != 4:
            return None
        anchor = None
        for i, (_, start, length) in enumerate(runs):
            for k in range(length):
                u = rot[(start + k) % len(rot)]
                lab = labels.get(edge_key(u, v))
                if lab is not None:
                    anchor = (i, lab[1][0] == v)
                    break
            if anchor is not None:
                break
        i0, out0 = anchor
        first = _BLOCKS.index((runs[i0][0], out0))
        for i, (color, start, length) in enumerate(runs):
            block = _BLOCKS[(first + i - i0) % 4]
            if block[0] != color:
                return None
            for k in range(length):
                u = rot[(start + k) % len(rot)]
                e = edge_key(u, v)
                arc = (v, u) if block[1] else (u, v)
                old = labels.get(e)
                if old is not None and old[1] != arc:
                    return None
                if old is None:
                    labels[e] = (color, arc)
                    if u not in BOUNDARY and u not in done:
                        queue.append(u)
        done.add(v)
    if len(labels) != len(colors):
        return None
    return labels


@dataclass(frozen=True)
class AlternatingCycle:
    vertices: tuple
    interior_vertices: frozenset
    interior_edges: frozenset


def _sector(rot: tuple, start, stop) -> list:
    """Neighbors strictly between ``start`` and ``stop``, going ccw."""
    n = len(rot)
    i = (rot.index(start) + 1) % n
    out = []
    while rot[i] != stop:
        out.append(rot[i])
        i = (i + 1) % n
    return out


def cycle_interior(ed: ExtendedDual, cycle: tuple) -> tuple[frozenset, frozenset]:
    """Vertices and edges strictly inside a 4-cycle without boundary vertices."""
    g = ed.graph
    on_cycle = set(cycle)
    for side in (0, 1):
        seeds, chords = [], set()
        for i, v in enumerate(cycle):
            prev, nxt = cycle[i - 1], cycle[(i + 1) % 4]
            between = _sector(g.rotation[v], nxt, prev) if side == 0 else _sector(g.rotation[v], prev, nxt)
            for u in between:
                if u in on_cycle:
                    chords.add(edge_key(u, v))
                else:
                    seeds.append(u)
        inside = set(seeds)
        stack = list(seeds)
        while stack:
            v = stack.pop()
            for u in g.rotation[v]:
                if u not in on_cycle and u not in inside:
                    inside.add(u)
                    stack.append(u)
        if inside & set(BOUNDARY):
            continue
        edges = set(chords)
        for v in inside:
            edges.update(edge_key(v, u) for u in g.rotation[v])
        return frozenset(inside), frozenset(edges)
    raise InvalidCycleError("both sides of the cycle reach the boundary")


def alternating_4cycles(ts: TransversalStructure) -> list[AlternatingCycle]:
    """Every 4-cycle whose edge colors alternate, with its interior."""
    g = ts.dual.graph
    adj = g.adjacency()
    order = {v: i for i, v in enumerate(g.vertices)}
    found = []
    for a in g.vertices:
        if a in BOUNDARY:
            continue
        for b in adj[a]:
            for c in adj[b]:
                if c == a:
                    continue
                for d in adj[c]:
                    if d in (a, b) or a not in adj[d]:
                        continue
                    cyc = (a, b, c, d)
                    # one representative per cycle: smallest vertex first, then smaller neighbor
                    if order[a] != min(order[x] for x in cyc) or order[b] > order[d]:
                        continue
                    if any(x in BOUNDARY for x in cyc):
                        continue
                    cols = [ts.color(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
                    if cols[0] == cols[1] or cols[0] != cols[2] or cols[1] != cols[3]:
                        continue
                    inside, edges = cycle_interior(ts.dual, cyc)
                    found.append(AlternatingCycle(cyc, inside, edges))
    return found


def flip(ts: TransversalStructure, c: AlternatingCycle) -> TransversalStructure:
    """Swap the colors inside ``c`` and re-derive the orientations."""
    cyc = c.vertices
    try:
        cols = [ts.color(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
    except KeyError as exc:
        raise InvalidCycleError("not a cycle of inner edges") from exc
    if cols[0] == cols[1] or cols[0] != cols[2] or cols[1] != cols[3]:
        raise InvalidCycleError("cycle is not alternating")
    if not c.interior_edges:
        raise InvalidCycleError("cycle has nothing inside")
    colors = {e: col for e, (col, _) in ts.labels.items()}
    for e in c.interior_edges:
        colors[e] = BLUE if colors[e] == RED else RED
    labels = orient(ts.dual, colors)
    if labels is None:
        raise InvalidCycleError("recoloring admits no orientation")
    out = TransversalStructure(ts.dual, labels)
    rep = validate_ts(out)
    if not rep:
        raise InvalidCycleError(f"flip gave an invalid structure: {rep.message}")
    return out


def flip_closure(ts: TransversalStructure, cap: int | None = None) -> list[TransversalStructure]:
    """All structures reachable by flips, breadth first."""
    seen = {ts.coloring()}
    out = [ts]
    queue = deque([ts])
    while queue:
        cur = queue.popleft()
        for c in alternating_4cycles(cur):
            nxt = flip(cur, c)
            key = nxt.coloring()
            if key in seen:
                continue
            seen.add(key)
            out.append(nxt)
            if cap is not None and len(out) > cap:
                raise CapExceeded(f"more than {cap} transversal structures")
            queue.append(nxt)
    return out


def flip_closure_size(layout: Layout, cap: int = 10_000) -> int:
    """Number of transversal structures on the extended dual of ``layout``.

    Raises CapExceeded when there are more than ``cap``.
    """
    return len(flip_closure(transversal_of(layout), cap))
