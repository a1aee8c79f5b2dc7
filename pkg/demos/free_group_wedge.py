"""A self-map of the wedge of two circles.

On F_2 the twisted conjugacy problem is searched up to a word-length
budget.  Classes found that way are labelled by words, and the Nielsen
number is reported as bounds unless they meet.
"""

from reidtrace import (
    chain_matrices,
    coefficient_sum,
    format_trace,
    lefschetz_number_wedge,
    nielsen_report,
    parse_wedge,
    reidemeister_trace_chain,
)

MAP = """\
x1 -> x2 x2 x1 X2
x2 -> x1 x2 x1
"""


def main():
    m = parse_wedge(MAP)
    f = chain_matrices(m)
    print("Fox Jacobian:")
    for i in range(m.rank):
        print("  ", [str(f.f1[i, j]) for j in range(m.rank)])
    for budget in (2, 4, 6):
        rt = reidemeister_trace_chain(m, budget)
        print(f"budget {budget}: RT = {format_trace(rt)}   N {nielsen_report(rt)}")
        assert coefficient_sum(rt) == lefschetz_number_wedge(m)
    print("L =", lefschetz_number_wedge(m))


if __name__ == "__main__":
    main()
