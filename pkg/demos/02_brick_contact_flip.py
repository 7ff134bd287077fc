"""The brick with ratios 2, 1, 1, 2.

In the brick, r1 sits above r2 on the left and r3 above r4 on the right,
with the left cut higher than the right one.  Asking for r1 and r4 to be
twice as tall as wide forces the left cut down to 1/3 of the height and
the right cut up to 2/3, so r1 and r4 end up touching.
"""

from fractions import Fraction

from arulayout import fixtures, strong_realizability

brick = fixtures.brick()
alpha = {"r1": Fraction(2), "r2": Fraction(1), "r3": Fraction(1), "r4": Fraction(2)}

for mode in ("strong", "weak"):
    rep = strong_realizability(brick, alpha, mode)
    print(f"{mode:6s} equivalent={rep.equivalent}")

rep = strong_realizability(brick, alpha)
for kind, c in rep.contact_diffs:
    print(f"  {kind}: {c.a} | {c.b} ({c.orientation})")
h = rep.layout.bbox.height
print("  left cut at", rep.layout["r2"].y1 / h, "of the height, right cut at", rep.layout["r4"].y1 / h)

# any one-sided layout keeps its contacts whatever the ratios
stack = fixtures.stack3()
rep = strong_realizability(stack, {"r1": Fraction(7), "r2": Fraction(1, 9), "r3": Fraction(3, 2)})
print("stack with ratios 7, 1/9, 3/2: equivalent =", rep.equivalent)
