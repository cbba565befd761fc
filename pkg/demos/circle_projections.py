"""Two projections of a circle, one unit apart.

Push the unit circle down to the line along the horizontal coordinate
and you get one bar counting connected components of the fibers
([-1,1], degree 0) plus one bar recording that interior fibers are two
points rather than one ((-1,1), degree 0).  Project instead to the
single point 0 and the circle's full cohomology lands there: a point
bar in degree 0 and a point bar in degree 1.

The two maps differ by exactly 1 in sup norm, and the barcode distance
reproduces that bound exactly, but only because the matching is allowed
to pair the open degree-0 bar with the closed degree-1 bar.
"""

from sheafdist import (
    distance_with_matching,
    global_sections,
    interpolate,
    parse_barcode,
)

horizontal = parse_barcode("""
0 [-1,1]
0 (-1,1)
""")
constant = parse_barcode("""
0 [0,0]
1 [0,0]
""")

value, matching = distance_with_matching(horizontal, constant)
print(f"distance: {value}")
print("matching:")
for m, left, right, cost in matching.central_pairs:
    print(f"  slot {m}: {left}  <->  {right}   (cost {cost})")

print("\nglobal sections never notice the difference:")
print("  horizontal:", global_sections(horizontal), "  constant:", global_sections(constant))

print("\nwalking the geodesic:")
for k in range(5):
    t = value * k / 4
    bars = ", ".join(str(g) for g in interpolate(horizontal, constant, matching, t))
    print(f"  t={t:4.2f}:  {bars}")
