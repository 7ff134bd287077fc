"""Random layouts and assignments for property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from arulayout.classify import is_one_sided
from arulayout.enumeration import random_tree_layout
from arulayout.trees import Leaf, Node, canonicalize


def random_tree(n: int, rng: random.Random, names=None):
    """Random canonical slicing tree on n leaves named r1..rn."""
    names = list(names or (f"r{i}" for i in range(1, n + 1)))
    if len(names) == 1:
        return Leaf(names[0])
    k = rng.randint(1, len(names) - 1)
    cut = rng.choice("HV")
    return canonicalize(Node(cut, random_tree(k, rng, names[:k]), random_tree(len(names) - k, rng, names[k:])))


def random_one_sided(n: int, rng: random.Random, tries: int = 500):
    for _ in range(tries):
        L = random_tree_layout(random_tree(n, rng), rng)
        if is_one_sided(L)[0]:
            return L
    raise RuntimeError("no one-sided layout drawn")


def random_assignment(ids, rng: random.Random) -> dict:
    return {r: Fraction(rng.randint(1, 50), rng.randint(1, 50)) for r in ids}


def solve(rows, rhs):
    """Exact Gauss-Jordan; None when singular."""
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    n = len(m)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]
