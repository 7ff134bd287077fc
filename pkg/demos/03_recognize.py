"""Which plane graphs are duals of one-sided sliceable layouts?

We run the recognizer over the small catalog: every dual of a one-sided
sliceable layout must be accepted with a verified layout, every other
graph must be rejected.  Then one big instance for timing.
"""

import time

from arulayout import dual, dual_catalog, recognize_dual
from arulayout.recognize import Instance, Stats, integer_layout, verify_realization
from arulayout.trees import CanonicalNode, Leaf

for n in range(1, 8):
    positive, negative = dual_catalog(n)
    ok = sum(verify_realization(recognize_dual(g), Instance.from_graph(g)).ok for g in positive)
    rejected = sum(recognize_dual(g) is None for g in negative)
    print(f"n={n}: {ok}/{len(positive)} positive accepted, {rejected}/{len(negative)} negative rejected")

_, negative = dual_catalog(6)
g = negative[0]
print("a rejected 6-vertex graph:", {v: sorted(nb) for v, nb in g.adjacency().items()})

fan = CanonicalNode("V", (Leaf("hub"), CanonicalNode("H", tuple(Leaf(f"r{i}") for i in range(1999)))))
g = dual(integer_layout(fan))
stats = Stats()
t = time.perf_counter()
found = recognize_dual(g, stats)
print(f"fan with 2000 vertices: found={found is not None} in {time.perf_counter() - t:.2f}s, "
      f"{stats.removes} removes, {stats.splits} splits")
