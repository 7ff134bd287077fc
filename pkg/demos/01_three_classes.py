"""Three layouts, three answers.

A stack of rects can take any aspect ratios while keeping its contacts.
The brick keeps its slicing structure but not its contacts, and the
pinwheel cannot even keep its structure.  For the last two we print an
assignment that proves it.
"""

from pathlib import Path

from arulayout import aru_class, find_windmill, fixtures, is_one_sided, render_svg, witness
from arulayout.render import RenderOptions, segment_indices

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)

for name in ("stack3", "brick", "pinwheel"):
    L = fixtures.NAMED[name]()
    cls = aru_class(L)
    print(f"{name:9s} {cls.value}")
    found = witness(L)
    if found:
        kind, ratios = found
        shown = ", ".join(f"{k}={v}" for k, v in sorted(ratios.items()))
        print(f"          {kind} witness: {shown}")

    highlight = set(segment_indices(L, is_one_sided(L)[1]))
    w = find_windmill(L)
    if w is not None:
        highlight |= segment_indices(L, w.arms)
    (OUT / f"{name}.svg").write_text(render_svg(L, RenderOptions(highlight=frozenset(highlight))))

print(f"drawings in {OUT}")
