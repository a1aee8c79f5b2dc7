"""Integral group rings: sparse formal sums of group elements, and matrices over them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DescriptorMismatch, NonSquare
from .groups import GroupDescriptor, GroupElement, group_mul


@dataclass(frozen=True)
class GroupRingElement:
    """Finite sum ``sum k_g g`` with nonzero integer ``k_g``, terms in canonical order."""

    group: GroupDescriptor
    terms: tuple[tuple[GroupElement, int], ...] = ()

    @classmethod
    def from_dict(cls, group: GroupDescriptor, coeffs: Mapping[GroupElement, int]) -> "GroupRingElement":
        for g in coeffs:
            if g.group != group:
                raise DescriptorMismatch(f"{g} is not in {group}")
        items = sorted(((g, k) for g, k in coeffs.items() if k), key=lambda t: t[0].sort_key())
        return cls(group, tuple(items))

    @classmethod
    def from_terms(cls, group: GroupDescriptor, terms: Iterable[tuple[GroupElement, int]]) -> "GroupRingElement":
        acc: dict[GroupElement, int] = defaultdict(int)
        for g, k in terms:
            acc[g] += k
        return cls.from_dict(group, acc)

    @classmethod
    def zero(cls, group: GroupDescriptor) -> "GroupRingElement":
        return cls(group)

    @classmethod
    def one(cls, group: GroupDescriptor) -> "GroupRingElement":
        return cls(group, ((group.identity(), 1),))

    @classmethod
    def of(cls, g: GroupElement, k: int = 1) -> "GroupRingElement":
        return cls.from_dict(g.group, {g: k})

    def as_dict(self) -> dict[GroupElement, int]:
        return dict(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_add(self, other)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple((g, -k) for g, k in self.terms))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_add(self, -other)

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement.from_dict(self.group, {g: k * other for g, k in self.terms})
        if isinstance(other, GroupElement):
            other = GroupRingElement.of(other)
        return ring_mul(self, other)

    def __rmul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return self * other
        if isinstance(other, GroupElement):
            return ring_mul(GroupRingElement.of(other), self)
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for g, k in self.terms:
            parts.append(f"{k:+d}[{g}]")
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


def _check(a: GroupRingElement, b: GroupRingElement):
    if a.group != b.group:
        raise DescriptorMismatch(f"{a.group} vs {b.group}")


def ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _check(a, b)
    return GroupRingElement.from_terms(a.group, a.terms + b.terms)


def ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _check(a, b)
    return GroupRingElement.from_terms(
        a.group, ((group_mul(g, h), k * l) for g, k in a.terms for h, l in b.terms)
    )


def augment(a: GroupRingElement) -> int:
    """Sum of coefficients (every group element sent to 1)."""
    return sum(k for _, k in a.terms)


@dataclass(frozen=True)
class GroupRingMatrix:
    group: GroupDescriptor
    entries: tuple[tuple[GroupRingElement, ...], ...]
    cols: int = 0

    def __post_init__(self):
        if self.entries:
            object.__setattr__(self, "cols", len(self.entries[0]))
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged group ring matrix")
            for x in row:
                if x.group != self.group:
                    raise DescriptorMismatch(f"entry over {x.group}, matrix over {self.group}")

    @classmethod
    def build(cls, group: GroupDescriptor, rows: Sequence[Sequence[GroupRingElement]], cols: int | None = None):
        entries = tuple(tuple(r) for r in rows)
        return cls(group, entries, cols if cols is not None else (len(entries[0]) if entries else 0))

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def ring_trace(m: GroupRingMatrix) -> GroupRingElement:
    if m.rows != m.cols:
        raise NonSquare(f"trace of a {m.rows}x{m.cols} matrix")
    out = GroupRingElement.zero(m.group)
    for i in range(m.rows):
        out = out + m.entries[i][i]
    return out
