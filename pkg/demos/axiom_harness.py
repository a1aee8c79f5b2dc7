"""Randomized checks of the five axioms on torus instances.

Each trial draws a pair of affine maps with nonsingular difference and
checks additivity, homotopy invariance, normalization, lift invariance and
the coincidence-of-lifts witnesses.
"""

import sys
import time

from reidtrace import AXIOMS, lefschetz_coincidence, run_trials


def main(trials=50, seed=0):
    start = time.perf_counter()
    results = run_trials(trials, seed=seed)
    counts = {a: 0 for a in AXIOMS}
    for t, report in results:
        for a in AXIOMS:
            counts[a] += report.results[a]
    dims = [t.n for t, _ in results]
    print(f"{trials} trials, seed {seed}, dimensions {sorted(set(dims))}, {time.perf_counter() - start:.1f} s")
    for a in AXIOMS:
        print(f"  {a:<22} {counts[a]}/{trials}")
    worst = max(results, key=lambda r: abs(lefschetz_coincidence(r[0].f, r[0].g)))[0]
    print("largest |L|:", lefschetz_coincidence(worst.f, worst.g), "on T^%d" % worst.n)


if __name__ == "__main__":
    main(*(int(x) for x in sys.argv[1:3]))
