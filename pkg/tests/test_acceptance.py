"""Acceptance criteria 1-9, one test each.

Every test records a PASS/FAIL line; the lines are printed together at the
end of the run (see ``pytest_terminal_summary`` in conftest.py).  Run this
file alone with ``pytest tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import time

import pytest

from arulayout import fixtures
from arulayout.classify import is_one_sided, is_sliceable
from arulayout.dualgraph import dual
from arulayout.enumeration import census, dual_catalog, enumerate_slicing_trees, min_vertex_cut, tree_to_layout
from arulayout.realize import brick_witness, strong_realizability
from arulayout.recognize import Instance, integer_layout, recognize_dual, verify_realization
from arulayout.transversal import flip_closure_size
from arulayout.trees import CanonicalNode, Leaf

from conftest import BRICK_ALPHA, one_sided_count, sliceable_count
from strategies import random_assignment, random_one_sided

RESULTS: dict[int, str] = {}


def _record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    assert ok, RESULTS[k]


def test_criterion_1_schroder_counts():
    t = time.perf_counter()
    got = [census(n).sliceable for n in range(1, 8)]
    want = [sliceable_count(n) for n in range(1, 8)]
    dt = time.perf_counter() - t
    _record(1, got == want and dt < 60, f"sliceable n=1..7 {got} vs recurrence {want}, {dt:.1f}s")


def test_criterion_2_one_sided_counts():
    got = [census(n).one_sided_sliceable for n in range(1, 8)]
    want = [one_sided_count(n) for n in range(1, 8)]
    _record(2, got == want, f"one-sided n=1..7 {got} vs A078482 {want}")


def _pinwheel_fixtures():
    pool = [fixtures.pinwheel(), fixtures.pinwheel_cw(), fixtures.pinwheel_split_center(), fixtures.double_windmill()]
    return pool + fixtures.pinwheel_family_6()


def test_criterion_3_unique_structure_iff_one_sided_sliceable():
    t = time.perf_counter()
    layouts = [tree_to_layout(tr) for n in range(1, 6) for tr in enumerate_slicing_trees(n)]
    layouts += _pinwheel_fixtures()
    bad = [L.ids for L in layouts if (flip_closure_size(L) == 1) != (is_one_sided(L)[0] and is_sliceable(L))]
    dt = time.perf_counter() - t
    _record(3, not bad and dt < 120, f"{len(layouts)} layouts, {len(bad)} mismatches, {dt:.1f}s")


def test_criterion_4_one_sided_layouts_realize_every_assignment():
    rng = random.Random(2024)
    failures = 0
    for _ in range(1000):
        L = random_one_sided(rng.randint(1, 10), rng)
        alpha = random_assignment(L.ids, rng)
        rep = strong_realizability(L, alpha)
        failures += not (rep.equivalent and rep.layout.ratios() == alpha)
    _record(4, failures == 0, f"1000 random assignments, {failures} failures")


def test_criterion_5_brick():
    rep = strong_realizability(fixtures.brick(), BRICK_ALPHA, "strong")
    gained = [(c.a, c.b) for c in rep.gained]
    _record(5, not rep.equivalent and gained == [("r1", "r4")], f"equivalent={rep.equivalent}, gained={gained}")


def test_criterion_6_brick_witness_sweep():
    checked, bad = 0, 0
    for n in range(1, 7):
        for tr in enumerate_slicing_trees(n):
            L = tree_to_layout(tr)
            if is_one_sided(L)[0]:
                continue
            checked += 1
            try:
                alpha = brick_witness(L)
                bad += alpha is None or strong_realizability(L, alpha).equivalent
            except Exception:
                bad += 1
    _record(6, bad == 0 and checked > 0, f"{checked} two-sided layouts, {bad} without a working witness")


def test_criterion_7_catalog_oracle():
    t = time.perf_counter()
    mismatches, pos_n, neg_n = 0, 0, 0
    for n in range(1, 7):
        positive, negative = dual_catalog(n)
        pos_n, neg_n = pos_n + len(positive), neg_n + len(negative)
        for g in positive:
            found = recognize_dual(g)
            mismatches += found is None or not verify_realization(found, Instance.from_graph(g))
        mismatches += sum(recognize_dual(g) is not None for g in negative)
    dt = time.perf_counter() - t
    _record(7, mismatches == 0 and dt < 600, f"{pos_n} positive, {neg_n} negative classes, {mismatches} mismatches, {dt:.1f}s")


def test_criterion_8_small_vertex_cuts():
    worst, count = 0, 0
    for n in range(4, 7):
        for g in dual_catalog(n)[0]:
            count += 1
            worst = max(worst, min_vertex_cut(g))
    _record(8, worst <= 3, f"{count} positive duals, largest minimum cut {worst}")


def _stack(n):
    return CanonicalNode("H", tuple(Leaf(f"r{i:05d}") for i in range(n)))


def _fan(n):
    return CanonicalNode("V", (Leaf("hub"), _stack(n - 1)))


def _fit_exponent(ns, ts):
    xs, ys = [math.log(n) for n in ns], [math.log(t) for t in ts]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def test_criterion_9_scaling():
    ns = (250, 500, 1000, 2000)
    parts = []
    ok = True
    for name, make in (("stack", _stack), ("fan", _fan)):
        times = []
        for n in ns:
            g = dual(integer_layout(make(n)))
            t = time.perf_counter()
            found = recognize_dual(g)
            times.append(time.perf_counter() - t)
            ok &= found is not None
        k = _fit_exponent(ns, times)
        ok &= k <= 2.5 and times[-1] < 10
        parts.append(f"{name}: exponent {k:.2f}, {times[-1]:.2f}s at n=2000")
    _record(9, ok, "; ".join(parts))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
