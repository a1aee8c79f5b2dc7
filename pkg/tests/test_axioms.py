import random
from fractions import Fraction

from reidtrace import AXIOMS, AdmissibleTuple, AffineTorusMap, random_instance, run_trials, verify_axioms
from reidtrace.linalg import det, mat_sub


def test_random_instances_are_admissible():
    rng = random.Random(11)
    for _ in range(50):
        t = random_instance(rng)
        assert 1 <= t.n <= 3
        assert det(mat_sub(t.g.A, t.f.A)) != 0
        assert all(-5 <= x <= 5 for row in t.f.A for x in row)
        assert all(0 <= x < 1 for x in t.f.c + t.g.c)


def test_seed_determinism():
    a = run_trials(5, seed=3)
    b = run_trials(5, seed=3)
    assert [t for t, _ in a] == [t for t, _ in b]
    assert [r.results for _, r in a] == [r.results for _, r in b]


def test_report_covers_every_axiom():
    t = AdmissibleTuple(AffineTorusMap.linear([[0, -1], [1, 0]]), AffineTorusMap.identity(2))
    report = verify_axioms(t)
    assert set(report.results) == set(AXIOMS)
    assert report.passed and not report.failures()


def test_translated_instance():
    t = AdmissibleTuple(
        AffineTorusMap([[2, 1], [0, -3]], (Fraction(1, 3), Fraction(1, 2))),
        AffineTorusMap([[1, 0], [1, 1]], (0, Fraction(5, 6))),
        (1, -2),
        (0, 3),
    )
    assert verify_axioms(t, seed=9).passed


def test_short_run_all_pass():
    assert all(r.passed for _, r in run_trials(25, seed=1))
