"""Counting sliceable layouts.

Sliceable layouts with n rects are counted by the large Schroder numbers;
the one-sided ones follow OEIS A078482.  Both columns come from brute force
enumeration, and the last column counts distinct dual graphs.
"""

from arulayout import census

print(" n  sliceable  one-sided  duals")
for n in range(1, 8):
    c = census(n)
    print(f"{n:2d}  {c.sliceable:9d}  {c.one_sided_sliceable:9d}  {c.dual_iso_classes:5d}")
