"""Randomized checks of the five characterizing properties of the local trace.

All randomness comes from ``random.Random(seed)``, so equal seeds give equal
reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classes import coefficient_sum, lift_transform
from .groups import vector
from .linalg import det, identity, mat_sub
from .torus import (
    AdmissibleTuple,
    AffineTorusMap,
    Region,
    coincidence_points,
    homotopy_transport,
    lefschetz_coincidence,
    lift_witnesses,
    local_reidemeister_trace,
)

AXIOMS = ("additivity", "homotopy", "normalization", "lift_invariance", "coincidence_of_lifts")


@dataclass
class AxiomReport:
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    def record(self, axiom: str, ok: bool, detail: str = ""):
        self.results[axiom] = self.results.get(axiom, True) and ok
        if not ok and axiom not in self.details:
            self.details[axiom] = detail

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list[str]:
        return [a for a, ok in self.results.items() if not ok]


def _random_translation(rng: random.Random, n: int, spread: int = 1) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randrange(spread * q), q) for q in (rng.randint(1, 6) for _ in range(n)))


def random_instance(rng: random.Random, max_n: int = 3, bound: int = 5) -> AdmissibleTuple:
    """Random admissible pair of affine torus maps with ``det(B - A) != 0``.

    About a quarter of the draws take ``g = id`` (a fixed-point problem).
    """
    while True:
        n = rng.randint(1, max_n)
        A = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if rng.random() < 0.25:
            B = identity(n)
        else:
            B = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if det(mat_sub(tuple(map(tuple, B)), tuple(map(tuple, A)))) != 0:
            break
    f = AffineTorusMap(A, _random_translation(rng, n))
    g = AffineTorusMap(B, _random_translation(rng, n))
    twist_f = tuple(rng.randint(-3, 3) for _ in range(n))
    twist_g = tuple(rng.randint(-3, 3) for _ in range(n))
    return AdmissibleTuple(f, g, twist_f, twist_g)


def verify_axioms(
    t: AdmissibleTuple,
    seed: int = 0,
    twist_pairs: int = 20,
    transports: int = 10,
    partitions: int = 3,
) -> AxiomReport:
    rng = random.Random(seed)
    report = AxiomReport()
    n = t.n
    trace = local_reidemeister_trace(t)
    ids = [p.id for p in t.points()]

    # Additivity: split the points of U between two disjoint open sets.
    for _ in range(partitions):
        part = {i for i in ids if rng.random() < 0.5}
        t1 = t.with_region(Region.select(part))
        t2 = t.with_region(Region.select(set(ids) - part))
        total = local_reidemeister_trace(t1) + local_reidemeister_trace(t2)
        report.record("additivity", total == trace, f"split {sorted(part)}: {total} != {trace}")
    empty = local_reidemeister_trace(t.with_region(Region.select(())))
    report.record("additivity", not empty, f"empty region gave {empty}")
    both = local_reidemeister_trace(t.with_region(Region.select(ids))) + empty
    report.record("additivity", both == trace, "union with an empty part changed the trace")

    # Homotopy: translation paths to random endpoints, some leaving [0,1)^n.
    for _ in range(transports):
        spread = rng.choice((1, 1, 3))
        c_f = tuple(x - (spread // 2) for x in _random_translation(rng, n, spread))
        c_g = tuple(x - (spread // 2) for x in _random_translation(rng, n, spread))
        moved = homotopy_transport(t, c_f, c_g)
        after = local_reidemeister_trace(moved)
        report.record("homotopy", after == trace, f"transport to {c_f}, {c_g}: {after} != {trace}")

    # Normalization on U = whole torus.
    whole = local_reidemeister_trace(t.with_region(Region.whole()))
    lef = lefschetz_coincidence(t.f, t.g)
    report.record("normalization", coefficient_sum(whole) == lef, f"c(RT) = {coefficient_sum(whole)}, L = {lef}")

    # Lift invariance, together with the exact relabelling k[s] -> k[b s a^-1].
    group = t.setting.codomain
    for _ in range(twist_pairs):
        a = tuple(rng.randint(-4, 4) for _ in range(n))
        b = tuple(rng.randint(-4, 4) for _ in range(n))
        moved = t.with_twists(
            tuple(x + y for x, y in zip(a, t.twist_f)), tuple(x + y for x, y in zip(b, t.twist_g))
        )
        after = local_reidemeister_trace(moved)
        report.record(
            "lift_invariance",
            coefficient_sum(after) == coefficient_sum(trace),
            f"twists {a}, {b}: c changed",
        )
        expected = lift_transform(trace, vector(a, group), vector(b, group))
        report.record("lift_invariance", after == expected, f"twists {a}, {b}: {after} != {expected}")

    # Coincidence of lifts: every essential class is realized by a lifted point.
    witnesses = lift_witnesses(t)
    for c, _ in trace.terms:
        found = witnesses.get(c)
        if found is None:
            report.record("coincidence_of_lifts", False, f"no point realizes {c}")
            continue
        p, k = found
        x_lift = tuple(x + ki for x, ki in zip(p.x, k))
        # sigma * (twist_f f~)(x~) == (twist_g g~)(x~) with sigma the representative
        lhs = tuple(s + a + y for s, a, y in zip(c.representative.payload, t.twist_f, t.f.lift(x_lift)))
        rhs = tuple(b + y for b, y in zip(t.twist_g, t.g.lift(x_lift)))
        report.record("coincidence_of_lifts", lhs == rhs, f"witness at {x_lift} misses {c}")
    report.results.setdefault("coincidence_of_lifts", True)
    return report


def run_trials(trials: int, seed: int = 0, max_n: int = 3, bound: int = 5) -> list[tuple[AdmissibleTuple, AxiomReport]]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        t = random_instance(rng, max_n, bound)
        out.append((t, verify_axioms(t, seed=rng.randrange(2**32))))
    return out
