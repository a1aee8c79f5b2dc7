"""Chain-level Reidemeister trace for basepoint-preserving self-maps of a wedge of circles.

The wedge has one vertex and ``rank`` edges, so its universal cover has a
one-generator ``C_0`` and a ``rank``-generator ``C_1`` over the group ring of
``F_rank``.  A map is given by the edge paths of its generators; the lifted
chain map in degree 1 is the Fox Jacobian.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .classes import (
    DEFAULT_BUDGET,
    TraceElement,
    TwistedSetting,
    canonical_rep,
    project_rho,
)
from .errors import DescriptorMismatch, IndexOutOfRange, ParseError
from .groupring import GroupRingElement, GroupRingMatrix, ring_trace
from .groups import (
    FREE,
    FreeGroup,
    GroupElement,
    Homomorphism,
    group_mul,
    parse_word_tokens,
    vector,
)
from .linalg import trace


def fox_derivative(w: GroupElement, j: int) -> GroupRingElement:
    """Free derivative ``dw/dx_j``, using ``d(uv) = du + u dv``.

    >>> F = FreeGroup(1)
    >>> str(fox_derivative(F([1, 1, 1]), 1))
    '1[e] +1[x1] +1[x1 x1]'
    """
    group = w.group
    if group.kind != FREE:
        raise DescriptorMismatch("Fox derivatives are defined on free groups")
    if not 1 <= j <= group.rank:
        raise IndexOutOfRange(f"generator index {j} outside rank {group.rank}")
    terms = []
    prefix = group.identity()
    for i in w.payload:
        if i == j:
            terms.append((prefix, 1))
        prefix_next = GroupElement(group, _append(prefix.payload, i))
        if i == -j:
            terms.append((prefix_next, -1))
        prefix = prefix_next
    return GroupRingElement.from_terms(group, terms)


def _append(word: tuple[int, ...], i: int) -> tuple[int, ...]:
    if word and word[-1] == -i:
        return word[:-1]
    return word + (i,)


@dataclass(frozen=True)
class WedgeSelfMap:
    endo: Homomorphism
    lift_twist: Optional[GroupElement] = None

    def __post_init__(self):
        g = self.endo.source
        if g.kind != FREE or self.endo.target != g:
            raise DescriptorMismatch("a wedge self-map needs an endomorphism of a free group")
        if self.lift_twist is None:
            object.__setattr__(self, "lift_twist", g.identity())
        elif self.lift_twist.group != g:
            raise DescriptorMismatch("lift twist is not in the fundamental group")

    @property
    def rank(self) -> int:
        return self.endo.source.rank

    @property
    def group(self):
        return self.endo.source

    def twisted(self, alpha: GroupElement) -> "WedgeSelfMap":
        """Same map, lift replaced by ``alpha`` times the current lift."""
        return WedgeSelfMap(self.endo, group_mul(alpha, self.lift_twist))

    def setting(self) -> TwistedSetting:
        # The lift a*f~ satisfies (a f~)(s x) = a phi(s) a^-1 (a f~)(x).
        return TwistedSetting.fixed_point(self.endo.conjugated(self.lift_twist))


class ChainMapData(NamedTuple):
    f0: GroupRingMatrix
    f1: GroupRingMatrix


def chain_matrices(m: WedgeSelfMap) -> ChainMapData:
    g = m.group
    a = GroupRingElement.of(m.lift_twist)
    f0 = GroupRingMatrix.build(g, [[a]])
    rows = [[a * fox_derivative(img, j) for j in range(1, m.rank + 1)] for img in m.endo.images]
    return ChainMapData(f0, GroupRingMatrix.build(g, rows))


def reidemeister_trace_chain(m: WedgeSelfMap, budget: int = DEFAULT_BUDGET) -> TraceElement:
    s = m.setting()
    data = chain_matrices(m)
    return project_rho(s, ring_trace(data.f0), budget) - project_rho(s, ring_trace(data.f1), budget)


def lefschetz_number_wedge(m: WedgeSelfMap) -> int:
    return 1 - trace(m.endo.matrix())


class NielsenReport(NamedTuple):
    lower: int
    upper: int
    exact: bool

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def __str__(self):
        if self.exact:
            return f"{self.lower} (exact)"
        return f"in [{self.lower}, {self.upper}] (budget-limited)"


def nielsen_report(t: TraceElement) -> NielsenReport:
    """Number of essential classes, or bounds on it when classes are budget-limited.

    The upper bound counts terms as merged so far (further merging can only
    cancel terms).  The lower bound merges by abelianized class, which can
    only identify genuinely equal-or-coarser classes, so each surviving
    abelianized class holds at least one essential class.
    """
    upper = len(t.terms)
    if t.exact:
        return NielsenReport(upper, upper, True)
    ab = t.setting.abelianized()
    merged: dict = defaultdict(int)
    for c, k in t.terms:
        v = vector(c.representative.abelianize(), ab.codomain)
        merged[canonical_rep(ab, v).representative] += k
    lower = sum(1 for k in merged.values() if k)
    # Coinciding bounds pin the count down.
    return NielsenReport(lower, upper, lower == upper)


_GEN_LINE = re.compile(r"^\s*x(\d+)\s*->\s*(.*)$")
_TWIST_LINE = re.compile(r"^\s*twist\s*=\s*(.*)$")


def parse_wedge(text: str) -> WedgeSelfMap:
    """Parse lines ``x1 -> x1 x2 X1`` (one per generator) and an optional ``twist = ...``.

    ``#`` starts a comment; an image written ``e`` or left empty is the identity.
    """
    images: dict[int, tuple[int, list[str]]] = {}
    twist: Optional[tuple[int, list[str]]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.lower() == "wedge":
            continue
        if m := _GEN_LINE.match(line):
            i = int(m.group(1))
            if i in images:
                raise ParseError(f"generator x{i} given twice", lineno)
            images[i] = (lineno, m.group(2).split())
        elif m := _TWIST_LINE.match(line):
            twist = (lineno, m.group(1).split())
        else:
            raise ParseError(f"expected 'xN -> word' or 'twist = word', got {line!r}", lineno)
    if not images:
        raise ParseError("no generator images given")
    rank = max(images)
    missing = [i for i in range(1, rank + 1) if i not in images]
    if missing:
        raise ParseError(f"missing image for generator x{missing[0]}")
    group = FreeGroup(rank)
    words = []
    for i in range(1, rank + 1):
        lineno, toks = images[i]
        words.append(_parse_word_at(toks, group, lineno))
    alpha = _parse_word_at(twist[1], group, twist[0]) if twist else None
    return WedgeSelfMap(Homomorphism(group, group, tuple(words)), alpha)


def _parse_word_at(tokens, group, lineno):
    try:
        return parse_word_tokens(tokens, group)
    except (ParseError, IndexOutOfRange) as exc:
        raise ParseError(str(exc), lineno) from exc


def format_wedge(m: WedgeSelfMap) -> str:
    lines = [f"x{i} -> {img}" for i, img in enumerate(m.endo.images, start=1)]
    if not m.lift_twist.is_identity:
        lines.append(f"twist = {m.lift_twist}")
    return "\n".join(lines) + "\n"
