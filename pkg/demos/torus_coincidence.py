"""Coincidences of affine maps on the 2-torus.

For f = 2I and g = -I the difference g - f = -3I, so there are nine
coincidence points, one for each element of (Z/3)^2.  A region that keeps
only some of them gives a local trace with only those classes, and the
pieces add back up to the whole.
"""

from reidtrace import (
    Region,
    coefficient_sum,
    format_trace,
    lefschetz_coincidence,
    local_reidemeister_trace,
    parse_torus,
    point_class,
    point_index,
)

INSTANCE = """\
torus n=2
A = [[2,0],[0,2]]
B = [[-1,0],[0,-1]]
"""


def main():
    t = parse_torus(INSTANCE)
    whole = local_reidemeister_trace(t)
    print("RT =", format_trace(whole))
    print("L  =", lefschetz_coincidence(t.f, t.g), " c(RT) =", coefficient_sum(whole))
    for p in t.points():
        print(f"  point {p.id}: x = {p}, index {point_index(t.f, t.g, p):+d}, class {point_class(t, p)}")

    left = t.with_region(Region.select([0, 1, 2]))
    right = t.with_region(Region.select(range(3, 9)))
    a, b = local_reidemeister_trace(left), local_reidemeister_trace(right)
    print("\nregion", left.region, "->", format_trace(a))
    print("region", right.region, "->", format_trace(b))
    assert a + b == whole

    # Changing the lift of g by a deck translation relabels classes.
    moved = left.with_twists((0, 0), (1, 0))
    print("\nsame region, g lifted through (1,0):", format_trace(local_reidemeister_trace(moved)))


if __name__ == "__main__":
    main()
