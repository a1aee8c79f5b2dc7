"""Self-maps of the circle computed two ways.

The degree-d map of S^1 is both a wedge of one circle (edge path a^d) and
the torus map x -> d x on T^1.  The chain-level trace and the local trace
from the coincidence points should agree term by term.
"""

from reidtrace import (
    AdmissibleTuple,
    AffineTorusMap,
    coefficient_sum,
    format_trace,
    lefschetz_number_wedge,
    local_reidemeister_trace,
    nielsen_report,
    parse_wedge,
    reidemeister_trace_chain,
)


def main():
    print(f"{'d':>3}  {'chain trace':<40} {'local trace':<40} L   N")
    for d in range(-4, 6):
        if d == 1:
            continue  # the identity has a circle of fixed points
        word = " ".join(["x1" if d > 0 else "X1"] * abs(d)) or "e"
        m = parse_wedge(f"x1 -> {word}")
        chain = reidemeister_trace_chain(m)
        local = local_reidemeister_trace(AdmissibleTuple(AffineTorusMap.linear([[d]]), AffineTorusMap.identity(1)))
        assert format_trace(chain) == format_trace(local)
        assert coefficient_sum(chain) == lefschetz_number_wedge(m) == 1 - d
        print(f"{d:>3}  {format_trace(chain):<40} {format_trace(local):<40} {lefschetz_number_wedge(m):<3} {nielsen_report(chain)}")
    print("\nEvery class carries the same sign, so N(f) = |1 - d| = |L(f)|.")


if __name__ == "__main__":
    main()
