"""Brute-force enumeration of sliceable layouts and dual catalogs."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import fixtures
from .classify import is_one_sided, is_sliceable
from .dualgraph import PlaneGraph, _components, dual, find_isomorphism, graph_invariant
from .errors import CapError
from .geometry import Layout, Rect, validate_layout
from .trees import CanonicalNode, Leaf, other

DEFAULT_CAP = 8


def _compositions(n: int):
    """Ordered ways to write n as a sum of at least two positive parts."""
    for k in range(1, n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


@lru_cache(maxsize=None)
def _shapes(n: int, cut: str) -> tuple:
    """Unlabeled canonical trees with n leaves whose root cut is ``cut``."""
    if n == 1:
        return (Leaf(),)
    out = []
    for parts in _compositions(n):
        options = [_children_of(k, cut) for k in parts]
        for kids in itertools.product(*options):
            out.append(CanonicalNode(cut, kids))
    return tuple(out)


def _children_of(k: int, parent_cut: str) -> tuple:
    return (Leaf(),) if k == 1 else _shapes(k, other(parent_cut))


def label_leaves(tree):
    """Name the leaves r1..rn in depth-first order."""
    counter = itertools.count(1)

    def walk(t):
        if isinstance(t, Leaf):
            return Leaf(f"r{next(counter)}")
        return CanonicalNode(t.cut, tuple(walk(c) for c in t.children))

    return walk(tree)


def enumerate_slicing_trees(n: int, cap: int = DEFAULT_CAP) -> list:
    """All canonical slicing trees with n leaves, leaves labeled r1..rn."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapError(f"n={n} is above the cap {cap}")
    if n == 1:
        return [Leaf("r1")]
    return [label_leaves(t) for cut in ("H", "V") for t in _shapes(n, cut)]


def _cut_ranks(tree) -> tuple[dict, int, int]:
    """In-order rank of every cut line, per axis.

    Keys are ``(id(node), i)`` for the line between children i and i+1.
    """
    ranks: dict = {}
    count = {"V": 0, "H": 0}

    def walk(t):
        if isinstance(t, Leaf):
            return
        for i, c in enumerate(t.children):
            walk(c)
            if i < len(t.children) - 1:
                count[t.cut] += 1
                ranks[(id(t), i)] = count[t.cut]

    walk(tree)
    return ranks, count["V"] + 1, count["H"] + 1


def tree_to_layout(tree) -> Layout:
    """Instantiate a slicing tree in the unit square.

    Every cut line sits at its in-order rank along its axis, so no two
    parallel cuts share a coordinate and the result is always generic.
    A single multiway cut comes out evenly spaced.
    """
    ranks, nx, ny = _cut_ranks(tree)
    rects = []

    def place(t, x0, y0, x1, y1):
        if isinstance(t, Leaf):
            rects.append(Rect(t.id, Fraction(x0, nx), Fraction(y0, ny), Fraction(x1, nx), Fraction(y1, ny)))
            return
        k = len(t.children)
        lines = [ranks[(id(t), i)] for i in range(k - 1)]
        for i, c in enumerate(t.children):
            if t.cut == "V":
                lo = x0 if i == 0 else lines[i - 1]
                hi = x1 if i == k - 1 else lines[i]
                place(c, lo, y0, hi, y1)
            else:
                lo = y0 if i == 0 else lines[i - 1]
                hi = y1 if i == k - 1 else lines[i]
                place(c, x0, lo, x1, hi)

    place(tree, 0, 0, nx, ny)
    return validate_layout(Rect("bbox", 0, 0, 1, 1), rects)


def random_tree_layout(tree, rng: random.Random | None = None, tries: int = 100) -> Layout:
    """Like :func:`tree_to_layout` but with random rational split sizes.

    Retries until the result is generic.
    """
    rng = rng or random.Random(0)
    for _ in range(tries):
        rects = []

        def place(t, x0, y0, x1, y1):
            if isinstance(t, Leaf):
                rects.append(Rect(t.id, x0, y0, x1, y1))
                return
            weights = [Fraction(rng.randint(1, 9)) for _ in t.children]
            total = sum(weights)
            lo = x0 if t.cut == "V" else y0
            span = (x1 - x0) if t.cut == "V" else (y1 - y0)
            for c, wt in zip(t.children, weights):
                hi = lo + span * wt / total
                if t.cut == "V":
                    place(c, lo, y0, hi, y1)
                else:
                    place(c, x0, lo, x1, hi)
                lo = hi

        place(tree, Fraction(0), Fraction(0), Fraction(1), Fraction(1))
        layout = validate_layout(Rect("bbox", 0, 0, 1, 1), rects)
        if layout.generic:
            return layout
    raise RuntimeError("no generic random instantiation found")


@dataclass(frozen=True)
class Census:
    n: int
    sliceable: int
    one_sided_sliceable: int
    dual_iso_classes: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sliceable": self.sliceable,
            "one_sided_sliceable": self.one_sided_sliceable,
            "dual_iso_classes": self.dual_iso_classes,
        }


def _iso_classes(graphs) -> list[PlaneGraph]:
    """One representative per isomorphism class, in first-seen order."""
    buckets: dict = {}
    reps = []
    for g in graphs:
        adj = g.adjacency()
        bucket = buckets.setdefault(graph_invariant(g), [])
        if any(find_isomorphism(adj, a) is not None for a, _ in bucket):
            continue
        bucket.append((adj, g))
        reps.append(g)
    return reps


def one_sided_layouts(n: int, cap: int = DEFAULT_CAP) -> list[Layout]:
    layouts = (tree_to_layout(t) for t in enumerate_slicing_trees(n, cap))
    return [L for L in layouts if is_one_sided(L)[0]]


def census(n: int, cap: int = DEFAULT_CAP) -> Census:
    trees = enumerate_slicing_trees(n, cap)
    good = [L for L in map(tree_to_layout, trees) if is_one_sided(L)[0]]
    classes = _iso_classes(dual(L) for L in good)
    return Census(n, len(trees), len(good), len(classes))


def nonsliceable_fixtures(n: int) -> list[Layout]:
    """Handmade non-sliceable layouts with n rects."""
    pool = [f() for name, f in fixtures.NAMED.items() if name != "quadrants"]
    pool.extend(fixtures.pinwheel_family_6())
    return [L for L in pool if len(L) == n and L.generic and not is_sliceable(L)]


def dual_catalog(n: int, cap: int = DEFAULT_CAP) -> tuple[list[PlaneGraph], list[PlaneGraph]]:
    """Iso-class representatives of duals with and without a one-sided sliceable layout.

    The negative side only sees enumerated sliceable layouts and the
    handmade non-sliceable fixtures.
    """
    trees = enumerate_slicing_trees(n, cap)
    good, bad = [], []
    for t in trees:
        L = tree_to_layout(t)
        (good if is_one_sided(L)[0] else bad).append(dual(L))
    bad.extend(dual(L) for L in nonsliceable_fixtures(n))
    positive = _iso_classes(good)
    pos_adj = [(graph_invariant(g), g.adjacency()) for g in positive]
    negative = []
    for g in _iso_classes(bad):
        inv, adj = graph_invariant(g), g.adjacency()
        if not any(i == inv and find_isomorphism(adj, a) is not None for i, a in pos_adj):
            negative.append(g)
    return positive, negative


def min_vertex_cut(g: PlaneGraph, limit: int = 4) -> float:
    """Smallest vertex cut, by brute force over subsets of size at most ``limit``.

    ``math.inf`` when no such subset disconnects the graph.
    """
    adj = g.adjacency()
    verts = list(g.vertices)
    for k in range(1, min(limit, len(verts) - 2) + 1):
        for removed in itertools.combinations(verts, k):
            if len(_components(adj, verts, set(removed))) > 1:
                return k
    return math.inf
