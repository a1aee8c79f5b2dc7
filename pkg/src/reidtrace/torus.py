"""Local Reidemeister trace for pairs of affine maps of the torus ``R^n / Z^n``.

An affine map ``x -> A x + c`` comes with its preferred lift to ``R^n`` (the
same formula, ``c`` in ``[0,1)^n``); other lifts differ by an integer
translation, recorded as a twist vector.  When ``det(B - A) != 0`` the two
maps meet in exactly ``|det(B - A)|`` points, each of index
``sign det(B - A)``, and the point ``x`` belongs to the Reidemeister class of
the integer translation carrying ``f~(x~)`` to ``g~(x~)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Optional, Sequence

from .classes import ClassId, TraceElement, TwistedSetting, canonical_rep, coefficient_sum
from .errors import NonIntegerTranslation, NotACoincidencePoint, SingularDifference
from .groups import FreeAbelian, vector
from .linalg import Matrix, as_matrix, det, identity, mat_sub, mat_vec, smith_form, solve_integer

RationalVector = tuple[Fraction, ...]


def _frac_vector(values: Iterable) -> RationalVector:
    return tuple(Fraction(v) for v in values)


def _mod1(v: Sequence[Fraction]) -> RationalVector:
    return tuple(x - math.floor(x) for x in v)


@dataclass(frozen=True)
class AffineTorusMap:
    A: Matrix
    c: RationalVector

    def __post_init__(self):
        a = as_matrix(self.A)
        c = _frac_vector(self.c)
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise ValueError("linear part must be a nonempty square matrix")
        if len(c) != n:
            raise ValueError(f"translation has length {len(c)}, expected {n}")
        if any(not 0 <= x < 1 for x in c):
            raise ValueError(f"translation {c} must lie in [0,1)^n")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def linear(cls, A: Sequence[Sequence[int]]) -> "AffineTorusMap":
        return cls(A, (0,) * len(A))

    @classmethod
    def identity(cls, n: int) -> "AffineTorusMap":
        return cls(identity(n), (0,) * n)

    @property
    def n(self) -> int:
        return len(self.A)

    def lift(self, x: Sequence) -> RationalVector:
        """Preferred lift ``A x + c`` on ``R^n``."""
        return tuple(y + ci for y, ci in zip(mat_vec(self.A, x), self.c))


@dataclass(frozen=True)
class Region:
    """An open set, recorded by the coincidence points it contains.

    ``points is None`` is the whole torus.
    """

    points: Optional[frozenset[int]] = None

    @classmethod
    def whole(cls) -> "Region":
        return cls(None)

    @classmethod
    def select(cls, ids: Iterable[int]) -> "Region":
        return cls(frozenset(ids))

    @property
    def is_whole(self) -> bool:
        return self.points is None

    def contains(self, point_id: int) -> bool:
        return self.points is None or point_id in self.points

    def __str__(self):
        if self.points is None:
            return "whole"
        return "points " + ",".join(str(i) for i in sorted(self.points))


@dataclass(frozen=True)
class CoincidencePoint:
    id: int
    x: RationalVector

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.x) + ")"


@dataclass(frozen=True)
class AdmissibleTuple:
    """``(f, twist_f * f~, g, twist_g * g~, U)`` for affine torus maps."""

    f: AffineTorusMap
    g: AffineTorusMap
    twist_f: tuple[int, ...] = None
    twist_g: tuple[int, ...] = None
    region: Region = field(default_factory=Region.whole)

    def __post_init__(self):
        n = self.f.n
        if self.g.n != n:
            raise ValueError(f"maps on T^{n} and T^{self.g.n}")
        for name in ("twist_f", "twist_g"):
            v = getattr(self, name)
            v = (0,) * n if v is None else tuple(int(x) for x in v)
            if len(v) != n:
                raise ValueError(f"{name} has length {len(v)}, expected {n}")
            object.__setattr__(self, name, v)
        d = lefschetz_coincidence(self.f, self.g)
        if d == 0:
            raise SingularDifference("det(g.A - f.A) = 0: coincidence set is not isolated")
        if self.region.points is not None:
            bad = [i for i in self.region.points if not 0 <= i < abs(d)]
            if bad:
                raise ValueError(f"region names point {bad[0]}, but only {abs(d)} points exist")

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def setting(self) -> TwistedSetting:
        return _setting(self.f.A, self.g.A)

    def points(self) -> list[CoincidencePoint]:
        """Coincidence points inside the region."""
        return [p for p in coincidence_points(self.f, self.g) if self.region.contains(p.id)]

    def with_region(self, region: Region) -> "AdmissibleTuple":
        return replace(self, region=region)

    def with_twists(self, twist_f: Sequence[int], twist_g: Sequence[int]) -> "AdmissibleTuple":
        return replace(self, twist_f=tuple(twist_f), twist_g=tuple(twist_g))


@lru_cache(maxsize=1024)
def _setting(A: Matrix, B: Matrix) -> TwistedSetting:
    return TwistedSetting.from_matrices(A, B)


def lefschetz_coincidence(f: AffineTorusMap, g: AffineTorusMap) -> int:
    return det(mat_sub(g.A, f.A))


def coincidence_points(f: AffineTorusMap, g: AffineTorusMap) -> list[CoincidencePoint]:
    """Solve ``(A - B) x = d - c`` modulo ``Z^n``.

    With ``U (A - B) V = D`` the substitution ``x = V y`` splits the system
    into ``D_i y_i = r_i (mod 1)``, ``r = U (d - c)``, which has exactly
    ``D_i`` solutions per coordinate.
    """
    return list(_point_data(f, g).points)


class _PointData(NamedTuple):
    points: tuple[CoincidencePoint, ...]
    translations: tuple[tuple[int, ...], ...]  # covering translation at p.x, untwisted lifts


@lru_cache(maxsize=1024)
def _point_data(f: AffineTorusMap, g: AffineTorusMap) -> _PointData:
    if f.n != g.n:
        raise ValueError("maps on tori of different dimension")
    n_mat = mat_sub(f.A, g.A)
    if det(n_mat) == 0:
        raise SingularDifference("det(g.A - f.A) = 0: coincidence set is not isolated")
    sf = smith_form(n_mat)
    shift = tuple(di - ci for di, ci in zip(g.c, f.c))
    r = mat_vec(sf.U, shift)
    diag = sf.diagonal
    # Everything below is integer numerators over the common denominator L.
    L = math.lcm(*(Fraction(v).denominator for v in r)) * diag[-1]
    r_num = [int(Fraction(v) * L) // d for v, d in zip(r, diag)]
    steps = [L // d for d in diag]
    numerators = set()
    for k in product(*(range(d) for d in diag)):
        y = [rn + ki * st for rn, ki, st in zip(r_num, k, steps)]
        numerators.add(tuple(v % L for v in mat_vec(sf.V, y)))
    diff = mat_sub(g.A, f.A)
    shift_num = [int(v * L) for v in shift]
    points, translations = [], []
    for i, xn in enumerate(sorted(numerators)):
        points.append(CoincidencePoint(i, tuple(Fraction(v, L) for v in xn)))
        m = []
        for v, s0 in zip(mat_vec(diff, xn), shift_num):
            q, rem = divmod(v + s0, L)
            if rem:
                raise NonIntegerTranslation(f"translation at point {i} is not integral")
            m.append(q)
        translations.append(tuple(m))
    return _PointData(tuple(points), tuple(translations))


def _is_coincidence(f: AffineTorusMap, g: AffineTorusMap, x: Sequence[Fraction]) -> bool:
    return all((a - b).denominator == 1 for a, b in zip(f.lift(x), g.lift(x)))


def point_index(f: AffineTorusMap, g: AffineTorusMap, p: CoincidencePoint) -> int:
    """``sign det(B - A)``; every coincidence point of an affine pair has the same index."""
    if not _is_coincidence(f, g, p.x):
        raise NotACoincidencePoint(f"{p} is not a coincidence point")
    d = lefschetz_coincidence(f, g)
    if d == 0:
        raise SingularDifference("degenerate coincidence point")
    return 1 if d > 0 else -1


def covering_translation(t: AdmissibleTuple, x_lift: Sequence) -> tuple[int, ...]:
    """The integer ``m`` with ``m + twist_f + f~(x~) = twist_g + g~(x~)``."""
    fx = t.f.lift(x_lift)
    gx = t.g.lift(x_lift)
    m = tuple(gi + bi - fi - ai for fi, gi, ai, bi in zip(fx, gx, t.twist_f, t.twist_g))
    if any(v.denominator != 1 for v in m):
        raise NonIntegerTranslation(f"translation {m} at {tuple(x_lift)} is not integral")
    return tuple(int(v) for v in m)


def point_class(t: AdmissibleTuple, p: CoincidencePoint, x_lift: Optional[Sequence[int]] = None) -> ClassId:
    """Class of the coincidence point ``p`` computed at the lift ``p.x + x_lift``."""
    if not _is_coincidence(t.f, t.g, p.x):
        raise NotACoincidencePoint(f"{p} is not a coincidence point")
    offset = (0,) * t.n if x_lift is None else x_lift
    m = covering_translation(t, tuple(xi + oi for xi, oi in zip(p.x, offset)))
    s = t.setting
    return canonical_rep(s, vector(m, s.codomain))


def _point_translations(t: AdmissibleTuple) -> list[tuple[CoincidencePoint, tuple[int, ...]]]:
    data = _point_data(t.f, t.g)
    twist = tuple(b - a for a, b in zip(t.twist_f, t.twist_g))
    return [
        (p, tuple(x + y for x, y in zip(m, twist)))
        for p, m in zip(data.points, data.translations)
        if t.region.contains(p.id)
    ]


def local_reidemeister_trace(t: AdmissibleTuple) -> TraceElement:
    """``sum ind(f, g, U_x) [x]`` over the coincidence points in the region."""
    sign = 1 if lefschetz_coincidence(t.f, t.g) > 0 else -1
    s = t.setting
    return TraceElement.from_terms(
        s, ((canonical_rep(s, vector(m, s.codomain)), sign) for _, m in _point_translations(t))
    )


def homotopy_transport(t: AdmissibleTuple, c_f: Sequence, c_g: Sequence) -> AdmissibleTuple:
    """End of the straight-line translation homotopy from ``(c, d)`` to ``(c_f, c_g)``.

    The lifted homotopy ``A x + c + s (c_f - c)`` ends at ``A x + c_f``; when
    ``c_f`` leaves ``[0,1)^n`` its integer part is moved into the twist so the
    stored translation stays preferred.  Selected points are carried along
    their paths ``x(s) = x + s (A - B)^-1 (delta(d - c))``.
    """
    c_f = _frac_vector(c_f)
    c_g = _frac_vector(c_g)
    floor_f = tuple(math.floor(x) for x in c_f)
    floor_g = tuple(math.floor(x) for x in c_g)
    f2 = AffineTorusMap(t.f.A, _mod1(c_f))
    g2 = AffineTorusMap(t.g.A, _mod1(c_g))
    region = t.region
    if region.points is not None:
        region = Region.select(_follow_points(t, c_f, c_g))
    return AdmissibleTuple(
        f2,
        g2,
        tuple(a + k for a, k in zip(t.twist_f, floor_f)),
        tuple(b + k for b, k in zip(t.twist_g, floor_g)),
        region,
    )


def _follow_points(t: AdmissibleTuple, c_f: RationalVector, c_g: RationalVector) -> list[int]:
    delta = tuple((dg - df) - (g0 - f0) for df, dg, f0, g0 in zip(c_f, c_g, t.f.c, t.g.c))
    step = _solve_rational(mat_sub(t.f.A, t.g.A), delta)
    new_f = AffineTorusMap(t.f.A, _mod1(c_f))
    new_g = AffineTorusMap(t.g.A, _mod1(c_g))
    index = {p.x: p.id for p in coincidence_points(new_f, new_g)}
    old = coincidence_points(t.f, t.g)
    return [index[_mod1(tuple(x + s for x, s in zip(old[i].x, step)))] for i in t.region.points]


def _solve_rational(m: Matrix, b: Sequence[Fraction]) -> RationalVector:
    # Nonsingular square system over Q via the Smith form: x = V D^-1 U b.
    sf = smith_form(m)
    ub = mat_vec(sf.U, b)
    y = tuple(Fraction(v) / d for v, d in zip(ub, sf.diagonal))
    return mat_vec(sf.V, y)


def lift_witnesses(t: AdmissibleTuple) -> dict[ClassId, tuple[CoincidencePoint, tuple[int, ...]]]:
    """For each class met in the region: a point ``p`` and lift offset ``k``
    at which the covering translation equals the class representative
    exactly, so ``rep * twist_f f~`` and ``twist_g g~`` meet at ``p.x + k``.
    """
    diff = mat_sub(t.g.A, t.f.A)
    s = t.setting
    out = {}
    for p, m0 in _point_translations(t):
        c = canonical_rep(s, vector(m0, s.codomain))
        if c in out:
            continue
        k = solve_integer(diff, tuple(r - v for r, v in zip(c.representative.payload, m0)))
        if k is None:
            raise NonIntegerTranslation(f"representative of {c} is not a lift of point {p.id}")
        out[c] = (p, k)
    return out


def lift_witness(t: AdmissibleTuple, c: ClassId) -> Optional[tuple[CoincidencePoint, tuple[int, ...]]]:
    return lift_witnesses(t).get(c)


def nielsen_number(t: AdmissibleTuple) -> int:
    tr = local_reidemeister_trace(t.with_region(Region.whole()))
    return len(tr.terms)
