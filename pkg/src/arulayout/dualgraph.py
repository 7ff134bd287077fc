"""Plane graphs given by rotation systems, and the duals of layouts."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    DisconnectedError,
    EmbeddingError,
    NotBiconnectedError,
    SizeLimitError,
)
from .geometry import Layout, _contacts_unchecked

Vertex = Hashable

# Labels of the four bounding-box vertices of an extended dual.
SOUTH, WEST, NORTH, EAST = "$S", "$W", "$N", "$E"
BOUNDARY = (SOUTH, WEST, NORTH, EAST)

ISO_BRUTE_FORCE_LIMIT = 10
ISO_SIZE_LIMIT = 40


@dataclass(frozen=True)
class PlaneGraph:
    """A connected simple plane graph.

    ``rotation[v]`` lists the neighbors of ``v`` in counterclockwise order and
    ``outer_face`` is the counterclockwise boundary walk of the unbounded face
    (a vertex repeats once per visit, so a cut vertex shows up several times).
    """

    vertices: tuple
    rotation: Mapping[Vertex, tuple]
    outer_face: tuple
    _faces: tuple = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "rotation", {v: tuple(self.rotation.get(v, ())) for v in self.vertices})
        object.__setattr__(self, "outer_face", tuple(self.outer_face))
        _check_embedding(self)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple]:
        seen = set()
        out = []
        for v in self.vertices:
            for u in self.rotation[v]:
                key = frozenset((u, v))
                if key not in seen:
                    seen.add(key)
                    out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    def adjacency(self) -> dict:
        return {v: set(self.rotation[v]) for v in self.vertices}

    def neighbors_cw(self, v) -> tuple:
        return tuple(reversed(self.rotation[v]))

    def faces(self) -> tuple:
        """All faces as vertex walks; the outer one is traced clockwise."""
        return self._faces


def _succ(rotation, v, u):
    rot = rotation[v]
    return rot[(rot.index(u) + 1) % len(rot)]


def _pred(rotation, v, u):
    rot = rotation[v]
    return rot[rot.index(u) - 1]


def trace_faces(rotation: Mapping) -> list[list]:
    """Trace every face, keeping each face on the left of its darts."""
    position = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotation.items()}
    visited = set()
    faces = []
    for v, rot in rotation.items():
        for u in rot:
            if (v, u) in visited:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in visited:
                visited.add((a, b))
                walk.append(a)
                rb = rotation[b]
                a, b = b, rb[position[b][a] - 1]
            faces.append(walk)
    return faces


def _cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    a, b = list(a), list(b)
    return any(a[s:] + a[:s] == b for s, x in enumerate(a) if x == b[0])


def _check_embedding(g: PlaneGraph) -> None:
    verts = set(g.vertices)
    if len(verts) != len(g.vertices):
        raise EmbeddingError("duplicate vertex")
    if not verts:
        raise EmbeddingError("empty graph")
    for v, rot in g.rotation.items():
        if len(set(rot)) != len(rot):
            raise EmbeddingError(f"multi-edge at {v!r}")
        for u in rot:
            if u == v:
                raise EmbeddingError(f"loop at {v!r}")
            if u not in verts or v not in g.rotation[u]:
                raise EmbeddingError(f"edge {v!r}-{u!r} is not symmetric")
    if not _is_connected(g.rotation, verts):
        raise DisconnectedError("plane graphs must be connected")
    faces = trace_faces(g.rotation) if g.edge_count() else []
    nv, ne = len(verts), g.edge_count()
    nf = max(len(faces), 1)
    if nv - ne + nf != 2:
        raise EmbeddingError(f"Euler check failed: V={nv} E={ne} F={nf}")
    if ne == 0:
        if list(g.outer_face) != list(g.vertices):
            raise EmbeddingError("outer face of a single vertex must be that vertex")
        object.__setattr__(g, "_faces", ((g.vertices[0],),))
        return
    target = list(reversed(g.outer_face))
    for f in faces:
        if _cyclic_equal(f, target):
            break
    else:
        raise EmbeddingError("outer_face does not match any traced face")
    object.__setattr__(g, "_faces", tuple(tuple(f) for f in faces))


def _is_connected(rotation, verts) -> bool:
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in rotation[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def inner_faces(g: PlaneGraph) -> list[tuple]:
    """Traced faces other than the outer one."""
    if g.edge_count() == 0:
        return []
    target = list(reversed(g.outer_face))
    out = []
    skipped = False
    for f in g.faces():
        if not skipped and _cyclic_equal(f, target):
            skipped = True
            continue
        out.append(f)
    return out


def is_near_triangulation(g: PlaneGraph) -> bool:
    """True iff every bounded face is a triangle."""
    return all(len(f) == 3 for f in inner_faces(g))


@dataclass(frozen=True)
class ExtendedDual:
    """Dual plus the four bbox-side vertices; outer face is S, E, N, W (ccw)."""

    graph: PlaneGraph
    boundary: tuple = BOUNDARY

    def inner_vertices(self) -> list:
        return [v for v in self.graph.vertices if v not in self.boundary]


def _rect_rotation(layout: Layout, extended: bool) -> dict:
    """Neighbors of each rect ccw: bottom (left to right), right, top, left."""
    bbox = layout.bbox
    sides: dict = {r.id: ([], [], [], []) for r in layout.rects}
    for c in _contacts_unchecked(layout):
        lo = c.overlap[0]
        if c.orientation == "V":
            sides[c.a][1].append((lo, c.b))
            sides[c.b][3].append((lo, c.a))
        else:
            sides[c.a][2].append((lo, c.b))
            sides[c.b][0].append((lo, c.a))
    rotation = {}
    for r in layout.rects:
        bottom, right, top, left = (sorted(s) for s in sides[r.id])
        seq = []
        if extended and r.y0 == bbox.y0:
            seq.append(SOUTH)
        seq.extend(v for _, v in bottom)
        if extended and r.x1 == bbox.x1:
            seq.append(EAST)
        seq.extend(v for _, v in right)
        if extended and r.y1 == bbox.y1:
            seq.append(NORTH)
        seq.extend(v for _, v in reversed(top))
        if extended and r.x0 == bbox.x0:
            seq.append(WEST)
        seq.extend(v for _, v in reversed(left))
        rotation[r.id] = tuple(seq)
    return rotation


def _boundary_rects(layout: Layout) -> tuple[list, list, list, list]:
    """Rects along each bbox side in ccw order: bottom, right, top, left."""
    b = layout.bbox
    bottom = sorted((r.x0, r.id) for r in layout.rects if r.y0 == b.y0)
    right = sorted((r.y0, r.id) for r in layout.rects if r.x1 == b.x1)
    top = sorted(((r.x0, r.id) for r in layout.rects if r.y1 == b.y1), reverse=True)
    left = sorted(((r.y0, r.id) for r in layout.rects if r.x0 == b.x0), reverse=True)
    return tuple([rid for _, rid in side] for side in (bottom, right, top, left))


def dual(layout: Layout) -> PlaneGraph:
    """Dual graph with the rotation system read off the geometry."""
    from .errors import NongenericError

    if not layout.generic:
        raise NongenericError("dual of a nongeneric layout")
    return _dual_unchecked(layout)


def _dual_unchecked(layout: Layout) -> PlaneGraph:
    rotation = _rect_rotation(layout, extended=False)
    walk = []
    for side in _boundary_rects(layout):
        for rid in side:
            if not walk or walk[-1] != rid:
                walk.append(rid)
    while len(walk) > 1 and walk[0] == walk[-1]:
        walk.pop()
    return PlaneGraph(layout.ids, rotation, walk)


def extended_dual(layout: Layout) -> ExtendedDual:
    """Dual augmented with S, W, N, E joined to the rects on each bbox side."""
    from .errors import NongenericError

    if not layout.generic:
        raise NongenericError("extended dual of a nongeneric layout")
    if set(layout.ids) & set(BOUNDARY):
        raise ValueError("rect ids collide with the reserved boundary labels")
    rotation = _rect_rotation(layout, extended=True)
    bottom, right, top, left = _boundary_rects(layout)
    rotation[SOUTH] = (EAST, *reversed(bottom), WEST)
    rotation[EAST] = (NORTH, *reversed(right), SOUTH)
    rotation[NORTH] = (WEST, *reversed(top), EAST)
    rotation[WEST] = (SOUTH, *reversed(left), NORTH)
    g = PlaneGraph(layout.ids + BOUNDARY, rotation, (SOUTH, EAST, NORTH, WEST))
    return ExtendedDual(g)


def _components(adj: Mapping, verts: Iterable, removed: set) -> list[set]:
    left = set(verts) - removed
    comps = []
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in left:
                    left.discard(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def articulation_points(adj: Mapping, verts: Sequence) -> list:
    """Iterative Tarjan low-link search; ``adj`` maps vertex to neighbors."""
    if not verts:
        return []
    disc: dict = {}
    low: dict = {}
    out = set()
    counter = 0
    for root in verts:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if u in disc:
                    low[v] = min(low[v], disc[u])
                    continue
                disc[u] = low[u] = counter
                counter += 1
                stack.append((u, v, iter(adj[u])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    out.add(parent)
        if root_children >= 2:
            out.add(root)
    order = {v: i for i, v in enumerate(verts)}
    return sorted(out, key=order.__getitem__)


def cut_vertices(g: PlaneGraph) -> set:
    """The articulation vertices of a connected plane graph."""
    return set(articulation_points(g.rotation, list(g.vertices)))


def _separates(adj, verts, removed) -> bool:
    return len(_components(adj, verts, set(removed))) > 1


def find_two_cut(g: PlaneGraph):
    """Some separating pair of a 2-connected graph, or None if 3-connected.

    Pairs of outer-face vertices are tried first; in a 2-connected
    near-triangulation every separating pair is an outer chord, so the
    fallback over all pairs only matters for other graphs.
    """
    if g.n >= 3 and cut_vertices(g):
        raise NotBiconnectedError("graph has a cut vertex")
    if g.n < 4:
        return None
    outer = list(dict.fromkeys(g.outer_face))
    pos = {v: i for i, v in enumerate(outer)}
    m = len(outer)
    for u in outer:
        for w in g.rotation[u]:
            if w in pos and pos[u] < pos[w] and (pos[w] - pos[u]) % m not in (1, m - 1):
                if _separates(g.rotation, g.vertices, (u, w)):
                    return (u, w)
    for u, w in itertools.combinations(g.vertices, 2):
        if _separates(g.rotation, g.vertices, (u, w)):
            return (u, w)
    return None


def _degree_signature(adj, v) -> tuple:
    return (len(adj[v]), tuple(sorted(len(adj[u]) for u in adj[v])))


def find_isomorphism(adj1: Mapping, adj2: Mapping) -> dict | None:
    """Backtracking search for an abstract-graph isomorphism."""
    if len(adj1) != len(adj2):
        return None
    if sum(map(len, adj1.values())) != sum(map(len, adj2.values())):
        return None
    sig1 = {v: _degree_signature(adj1, v) for v in adj1}
    sig2 = {v: _degree_signature(adj2, v) for v in adj2}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    by_sig = defaultdict(list)
    for v, s in sig2.items():
        by_sig[s].append(v)
    # connected-first ordering keeps the adjacency checks tight
    order = []
    seen = set()
    for start in sorted(adj1, key=lambda v: (-len(adj1[v]), str(v))):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(adj1[v], key=str):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_sig[sig1[v]]:
            if w in used:
                continue
            ok = True
            for u in adj1[v]:
                if u in mapping and mapping[u] not in adj2[w]:
                    ok = False
                    break
            if not ok:
                continue
            mapped_nbrs = sum(1 for u in adj1[v] if u in mapping)
            if sum(1 for x in adj2[w] if x in used) != mapped_nbrs:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def plane_isomorphic(g1: PlaneGraph, g2: PlaneGraph, limit: int = ISO_SIZE_LIMIT) -> bool:
    """Abstract-graph isomorphism (the embeddings are ignored)."""
    if max(g1.n, g2.n) > limit:
        raise SizeLimitError(f"isomorphism test limited to {limit} vertices")
    return find_isomorphism(g1.adjacency(), g2.adjacency()) is not None


def graph_invariant(g: PlaneGraph) -> tuple:
    """Cheap isomorphism invariant used to bucket catalogs."""
    adj = g.adjacency()
    return (g.n, g.edge_count(), tuple(sorted(_degree_signature(adj, v) for v in adj)))


def induced_plane_graph(g: PlaneGraph, keep: Iterable) -> PlaneGraph:
    """The induced sub-embedding on ``keep`` (must be connected)."""
    keep = set(keep)
    rotation = {v: tuple(u for u in g.rotation[v] if u in keep) for v in g.vertices if v in keep}
    verts = tuple(v for v in g.vertices if v in keep)
    walk = outer_walk_from(rotation, g.outer_face, keep)
    return PlaneGraph(verts, rotation, walk)


def outer_walk_from(rotation: Mapping, parent_walk: Sequence, keep: set) -> list:
    """Ccw outer walk of an induced subgraph, seeded by the parent's walk.

    Any ccw outer dart of the parent with both ends kept stays a ccw outer
    dart of the subgraph.  ``rotation`` must already be restricted to
    ``keep``.
    """
    if len(keep) == 1:
        return list(keep)
    m = len(parent_walk)
    seed = None
    for i in range(m):
        a, b = parent_walk[i], parent_walk[(i + 1) % m]
        if a in keep and b in keep and a != b:
            seed = (a, b)
            break
    if seed is None:
        raise EmbeddingError("no outer dart survives in the subgraph")
    walk = []
    a, b = seed
    while True:
        walk.append(a)
        rb = rotation[b]
        nxt = rb[(rb.index(a) + 1) % len(rb)]
        a, b = b, nxt
        if (a, b) == seed:
            break
    return walk
