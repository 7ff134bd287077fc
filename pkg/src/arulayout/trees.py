"""Slicing trees: binary guillotine trees and canonical multiway trees.

For a ``"V"`` cut the children run left to right; for ``"H"`` they run
bottom to top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Leaf:
    id: str | None = None


@dataclass(frozen=True)
class Node:
    """Binary guillotine cut; ``first`` is the left (V) or bottom (H) part."""

    cut: str
    first: "SlicingTree"
    second: "SlicingTree"


@dataclass(frozen=True)
class CanonicalNode:
    """Multiway cut.  No child of a cut has the same orientation."""

    cut: str
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a cut needs at least two children")
        for c in self.children:
            if isinstance(c, CanonicalNode) and c.cut == self.cut:
                raise ValueError("nested cut with the same orientation is not canonical")


SlicingTree = Union[Leaf, Node]
CanonicalTree = Union[Leaf, CanonicalNode]


def other(cut: str) -> str:
    return "H" if cut == "V" else "V"


def binarize(tree: CanonicalTree) -> SlicingTree:
    """Right-nested binary form: the smallest cut coordinate splits first."""
    if isinstance(tree, Leaf):
        return tree
    kids = [binarize(c) for c in tree.children]
    out = kids[-1]
    for k in reversed(kids[:-1]):
        out = Node(tree.cut, k, out)
    return out


def canonicalize(tree) -> CanonicalTree:
    """Merge nested cuts of equal orientation into one multiway cut."""
    if isinstance(tree, Leaf):
        return tree
    if isinstance(tree, CanonicalNode):
        parts = list(tree.children)
    else:
        parts = [tree.first, tree.second]
    cut = tree.cut
    flat = []
    stack = list(reversed(parts))
    while stack:
        t = stack.pop()
        if isinstance(t, Node) and t.cut == cut:
            stack.extend([t.second, t.first])
        elif isinstance(t, CanonicalNode) and t.cut == cut:
            stack.extend(reversed(t.children))
        else:
            flat.append(canonicalize(t))
    return CanonicalNode(cut, tuple(flat))


def leaves(tree) -> list:
    out = []
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Leaf):
            out.append(t.id)
        elif isinstance(t, Node):
            stack.extend([t.second, t.first])
        else:
            stack.extend(reversed(t.children))
    return out


def shape(tree) -> CanonicalTree:
    """The canonical tree with leaf labels dropped."""
    t = canonicalize(tree)

    def strip(x):
        if isinstance(x, Leaf):
            return Leaf()
        return CanonicalNode(x.cut, tuple(strip(c) for c in x.children))

    return strip(t)


def size(tree) -> int:
    return len(leaves(tree))


def tree_to_dict(tree) -> dict:
    if isinstance(tree, Leaf):
        return {"leaf": tree.id}
    if isinstance(tree, Node):
        return {"cut": tree.cut, "first": tree_to_dict(tree.first), "second": tree_to_dict(tree.second)}
    return {"cut": tree.cut, "children": [tree_to_dict(c) for c in tree.children]}


def tree_from_dict(data: dict):
    if "leaf" in data:
        return Leaf(data["leaf"])
    if data.get("cut") not in ("H", "V"):
        raise ValueError(f"bad cut {data.get('cut')!r}")
    if "children" in data:
        return CanonicalNode(data["cut"], tuple(tree_from_dict(c) for c in data["children"]))
    return Node(data["cut"], tree_from_dict(data["first"]), tree_from_dict(data["second"]))
