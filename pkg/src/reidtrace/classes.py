"""Doubly twisted conjugacy classes and formal sums of them.

For homomorphisms ``phi, psi: G -> H`` the relation on ``H`` is

    a ~ psi(s)^-1 * b * phi(s)    for some s in G.

On a free abelian (or infinite cyclic) target this is ``b - a`` lying in the
image of ``psi - phi``, decided exactly with the Smith normal form.  On a
free group of rank >= 2 the relation is searched over ``s`` up to a word
length budget, and answers that depend on the budget say so.
"""

from __future__ import annotations

import enum
import itertools
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .errors import DescriptorMismatch, ParseError
from .groupring import GroupRingElement, augment
from .groups import (
    FREE,
    FreeAbelian,
    GroupDescriptor,
    GroupElement,
    Homomorphism,
    group_inv,
    group_mul,
    hom_apply,
    parse_element,
)
from .linalg import Matrix, SmithForm, det, mat_sub, mat_vec, smith_form, solve_integer

DEFAULT_BUDGET = 8

# Above this many candidate twisting words the search list is streamed, not cached.
_CACHE_LIMIT = 100_000


@dataclass(frozen=True)
class TwistedSetting:
    domain: GroupDescriptor
    codomain: GroupDescriptor
    phi: Homomorphism
    psi: Homomorphism

    def __post_init__(self):
        for h in (self.phi, self.psi):
            if h.source != self.domain or h.target != self.codomain:
                raise DescriptorMismatch(f"homomorphism {h.source}->{h.target} does not fit setting")

    @classmethod
    def from_matrices(cls, phi: Sequence[Sequence[int]], psi: Sequence[Sequence[int]]) -> "TwistedSetting":
        ph, ps = Homomorphism.from_matrix(phi), Homomorphism.from_matrix(psi)
        return cls(ph.source, ph.target, ph, ps)

    @classmethod
    def fixed_point(cls, phi: Homomorphism) -> "TwistedSetting":
        """Setting of ``(f, id)``: relation ``a ~ s^-1 b phi(s)``."""
        return cls(phi.source, phi.target, phi, Homomorphism.identity(phi.target))

    @property
    def exact(self) -> bool:
        return self.codomain.is_abelian

    @cached_property
    def difference(self) -> Matrix:
        """Abelianized ``psi - phi``; its cokernel indexes the abelianized classes."""
        return mat_sub(self.psi.matrix(), self.phi.matrix())

    @cached_property
    def smith(self) -> SmithForm:
        return smith_form(self.difference)

    @cached_property
    def _reducer(self):
        sf = self.smith
        return sf.U, sf.diagonal, sf.U_inv

    @cached_property
    def _hash(self) -> int:
        return hash((self.domain, self.codomain, self.phi, self.psi))

    def __hash__(self):
        return self._hash

    def abelianized(self) -> "TwistedSetting":
        return TwistedSetting.from_matrices(self.phi.matrix(), self.psi.matrix())

    def __str__(self):
        return f"R[{self.domain}->{self.codomain}]"


def twisted_image(s: TwistedSetting, sigma: GroupElement, b: GroupElement) -> GroupElement:
    """``psi(sigma)^-1 * b * phi(sigma)``."""
    return group_mul(group_mul(group_inv(hom_apply(s.psi, sigma)), b), hom_apply(s.phi, sigma))


@dataclass(frozen=True)
class ClassId:
    """A Reidemeister class named by a representative.

    ``budget is None`` means the representative is the unique canonical one.
    Otherwise it is the least element found among twists by words of length
    at most ``budget``, and two ids for the same class may still differ.
    """

    setting: TwistedSetting
    representative: GroupElement
    budget: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.budget is None

    def sort_key(self):
        return self.representative.sort_key()

    @property
    def label(self) -> str:
        """Exact classes print as exponent vectors, so ``a^m`` in F_1 reads ``(m)``."""
        if self.exact:
            return "(" + ",".join(str(x) for x in self.representative.abelianize()) + ")"
        return str(self.representative)

    def __str__(self):
        return f"[{self.label}]"


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not equivalent"
    UNKNOWN = "unknown"


class Equivalence(NamedTuple):
    verdict: Verdict
    witness: Optional[GroupElement] = None

    def __bool__(self):
        return self.verdict is Verdict.EQUIVALENT


class _Unenumerable:
    def __repr__(self):
        return "InfiniteOrUndecidable"

    def __bool__(self):
        return False


InfiniteOrUndecidable = _Unenumerable()


def _check_codomain(s: TwistedSetting, *elements: GroupElement):
    for g in elements:
        if g.group != s.codomain:
            raise DescriptorMismatch(f"{g} is not in {s.codomain}")


def _from_vector(v: Sequence[int], group: GroupDescriptor) -> GroupElement:
    """Element of an abelian-word-problem group with exponent vector ``v``."""
    if group.kind != FREE:
        return GroupElement(group, tuple(v))
    letters: list[int] = []
    for i, k in enumerate(v, start=1):
        letters.extend([i if k > 0 else -i] * abs(k))
    return GroupElement(group, tuple(letters))


def _reduce_mod_image(s: TwistedSetting, v: Sequence[int]) -> tuple[int, ...]:
    # Coordinates in the Smith basis of the target, each taken into [0, d_i).
    u, diag, u_inv = s._reducer
    w = list(mat_vec(u, v))
    for i, d in enumerate(diag):
        if d:
            w[i] %= d
    return mat_vec(u_inv, w)


def _free_words(group: GroupDescriptor, max_len: int) -> Iterator[GroupElement]:
    """All reduced words of length <= max_len, shortest first."""
    layer = [group.identity()]
    yield layer[0]
    letters = [i for k in range(1, group.rank + 1) for i in (k, -k)]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            last = w.payload[-1] if w.payload else 0
            for i in letters:
                if i != -last:
                    nxt.append(GroupElement(group, w.payload + (i,)))
        yield from nxt
        layer = nxt


def _twist_pairs(s: TwistedSetting, budget: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], GroupElement]]:
    """Yield ``(psi(sigma)^-1, phi(sigma), sigma)`` payloads for |sigma| <= budget."""
    r = s.domain.rank
    count = 1 + 2 * r * sum((2 * r - 1) ** k for k in range(budget)) if s.domain.kind == FREE else None
    if count is not None and count <= _CACHE_LIMIT:
        yield from _cached_twist_pairs(s, budget)
    else:
        yield from _generate_twist_pairs(s, budget)


def _generate_twist_pairs(s: TwistedSetting, budget: int):
    if s.domain.kind != FREE:
        raise DescriptorMismatch("word search needs a free domain")
    for sigma in _free_words(s.domain, budget):
        yield (
            group_inv(hom_apply(s.psi, sigma)).payload,
            hom_apply(s.phi, sigma).payload,
            sigma,
        )


@lru_cache(maxsize=16)
def _cached_twist_pairs(s: TwistedSetting, budget: int):
    return tuple(_generate_twist_pairs(s, budget))


def _reduce_concat(a: tuple, b: tuple, c: tuple) -> tuple:
    stack: list[int] = []
    for i in itertools.chain(a, b, c):
        if stack and stack[-1] == -i:
            stack.pop()
        else:
            stack.append(i)
    return tuple(stack)


def twisted_equiv(
    s: TwistedSetting, alpha: GroupElement, beta: GroupElement, budget: int = DEFAULT_BUDGET
) -> Equivalence:
    """Decide ``alpha ~ beta``, returning a witness ``sigma`` with
    ``alpha == psi(sigma)^-1 * beta * phi(sigma)`` when one is found.
    """
    _check_codomain(s, alpha, beta)
    if alpha == beta:
        return Equivalence(Verdict.EQUIVALENT, s.domain.identity())
    delta = tuple(b - a for a, b in zip(alpha.abelianize(), beta.abelianize()))
    sol = solve_integer(s.difference, delta)
    if s.exact:
        if sol is None:
            return Equivalence(Verdict.NOT_EQUIVALENT)
        return Equivalence(Verdict.EQUIVALENT, _from_vector(sol, s.domain))
    if sol is None:
        return Equivalence(Verdict.NOT_EQUIVALENT)
    target = alpha.payload
    for psi_inv, phi_s, sigma in _twist_pairs(s, budget):
        if _reduce_concat(psi_inv, beta.payload, phi_s) == target:
            return Equivalence(Verdict.EQUIVALENT, sigma)
    return Equivalence(Verdict.UNKNOWN)


def canonical_rep(s: TwistedSetting, alpha: GroupElement, budget: int = DEFAULT_BUDGET) -> ClassId:
    _check_codomain(s, alpha)
    if s.exact:
        v = _reduce_mod_image(s, alpha.abelianize())
        return ClassId(s, _from_vector(v, s.codomain))
    return _canonical_rep(s, alpha, budget)


@lru_cache(maxsize=65536)
def _canonical_rep(s: TwistedSetting, alpha: GroupElement, budget: int) -> ClassId:
    best = alpha.payload
    best_key = alpha.sort_key()
    for psi_inv, phi_s, _ in _twist_pairs(s, budget):
        cand = _reduce_concat(psi_inv, alpha.payload, phi_s)
        if len(cand) > len(best):
            continue
        key = GroupElement(s.codomain, cand).sort_key()
        if key < best_key:
            best, best_key = cand, key
    return ClassId(s, GroupElement(s.codomain, best), budget)


def enumerate_classes(s: TwistedSetting) -> Union[list[ClassId], _Unenumerable]:
    """All classes when there are finitely many and the relation is decidable."""
    if not s.exact:
        return InfiniteOrUndecidable
    m = s.difference
    if len(m) != len(m[0]) or det(m) == 0:
        return InfiniteOrUndecidable
    sf = s.smith
    boxes = itertools.product(*(range(d) for d in sf.diagonal))
    reps = [ClassId(s, _from_vector(mat_vec(sf.U_inv, w), s.codomain)) for w in boxes]
    return sorted(reps, key=ClassId.sort_key)


@dataclass(frozen=True)
class TraceElement:
    """Integer combination of Reidemeister classes of one setting."""

    setting: TwistedSetting
    terms: tuple[tuple[ClassId, int], ...] = ()

    @classmethod
    def from_terms(cls, setting: TwistedSetting, terms: Iterable[tuple[ClassId, int]]) -> "TraceElement":
        acc: dict[ClassId, int] = defaultdict(int)
        for c, k in terms:
            if c.setting != setting:
                raise DescriptorMismatch("class from a different setting")
            acc[c] += k
        items = sorted(((c, k) for c, k in acc.items() if k), key=lambda t: t[0].sort_key())
        return cls(setting, tuple(items))

    def as_dict(self) -> dict[ClassId, int]:
        return dict(self.terms)

    def coefficient(self, c: ClassId) -> int:
        return self.as_dict().get(c, 0)

    @property
    def classes(self) -> list[ClassId]:
        return [c for c, _ in self.terms]

    @property
    def exact(self) -> bool:
        return all(c.exact for c, _ in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "TraceElement") -> "TraceElement":
        if other.setting != self.setting:
            raise DescriptorMismatch("traces from different settings")
        return TraceElement.from_terms(self.setting, self.terms + other.terms)

    def __neg__(self) -> "TraceElement":
        return TraceElement(self.setting, tuple((c, -k) for c, k in self.terms))

    def __sub__(self, other: "TraceElement") -> "TraceElement":
        return self + (-other)

    def __str__(self):
        return format_trace(self)


def project_rho(s: TwistedSetting, a: GroupRingElement, budget: int = DEFAULT_BUDGET) -> TraceElement:
    if a.group != s.codomain:
        raise DescriptorMismatch(f"group ring over {a.group}, setting codomain {s.codomain}")
    return TraceElement.from_terms(s, ((canonical_rep(s, g, budget), k) for g, k in a.terms))


def coefficient_sum(t: TraceElement) -> int:
    return sum(k for _, k in t.terms)


def lift_transform(t: TraceElement, alpha: GroupElement, beta: GroupElement) -> TraceElement:
    """Send every term ``k[sigma]`` to ``k[beta sigma alpha^-1]``."""
    s = t.setting
    _check_codomain(s, alpha, beta)
    a_inv = group_inv(alpha)
    moved = []
    for c, k in t.terms:
        g = group_mul(group_mul(beta, c.representative), a_inv)
        budget = DEFAULT_BUDGET if c.budget is None else c.budget
        moved.append((canonical_rep(s, g, budget), k))
    return TraceElement.from_terms(s, moved)


def format_trace(t: TraceElement) -> str:
    """``-1[(0)] -1[(1)]``; the empty sum prints as ``0``."""
    if not t.terms:
        return "0"
    parts = [f"{k:+d}[{c.label}]" for c, k in t.terms]
    out = " ".join(parts)
    return out[1:] if out.startswith("+") else out


_TERM = re.compile(r"\s*([+-]?\s*\d+)\s*\[([^\]]*)\]")


def parse_trace(text: str, s: TwistedSetting, budget: int = DEFAULT_BUDGET) -> TraceElement:
    """Read the output of :func:`format_trace` back, canonicalizing each class."""
    text = text.strip()
    if text == "0":
        return TraceElement(s)
    pos = 0
    terms = []
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ParseError(f"cannot read trace term at {text[pos:]!r}")
        k = int(m.group(1).replace(" ", ""))
        body = m.group(2).strip()
        if body.startswith("(") and s.codomain.kind == FREE:
            g = _from_vector(parse_element(body, FreeAbelian(s.codomain.rank)).payload, s.codomain)
        else:
            g = parse_element(body, s.codomain)
        terms.append((canonical_rep(s, g, budget), k))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return TraceElement.from_terms(s, terms)
