"""Free groups and free abelian groups with exact element arithmetic.

Words use signed generator indices: ``3`` is ``x3`` and ``-3`` its inverse.
Free abelian elements are integer vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DescriptorMismatch, IndexOutOfRange, ParseError
from .linalg import Matrix, as_matrix, mat_vec

FREE = "free"
ABELIAN = "abelian"


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in (FREE, ABELIAN):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.rank < 1:
            raise ValueError("group rank must be at least 1")

    @property
    def is_free(self) -> bool:
        return self.kind == FREE

    @property
    def is_abelian(self) -> bool:
        # F_1 is infinite cyclic, so its word problem is the abelian one.
        return self.kind == ABELIAN or self.rank == 1

    def identity(self) -> "GroupElement":
        if self.kind == FREE:
            return GroupElement(self, ())
        return GroupElement(self, (0,) * self.rank)

    def generators(self) -> list["GroupElement"]:
        if self.kind == FREE:
            return [GroupElement(self, (i,)) for i in range(1, self.rank + 1)]
        return [
            GroupElement(self, tuple(int(i == j) for j in range(self.rank)))
            for i in range(self.rank)
        ]

    def __call__(self, payload) -> "GroupElement":
        if self.kind == FREE:
            return reduce_word(payload, self)
        return vector(payload, self)

    def __str__(self):
        name = "F" if self.kind == FREE else "Z^"
        return f"{name}{self.rank}"


def FreeGroup(rank: int) -> GroupDescriptor:
    return GroupDescriptor(FREE, rank)


def FreeAbelian(rank: int) -> GroupDescriptor:
    return GroupDescriptor(ABELIAN, rank)


def _letter_key(i: int) -> tuple[int, int]:
    # x1 < X1 < x2 < X2 < ...
    return (abs(i), i < 0)


@dataclass(frozen=True)
class GroupElement:
    group: GroupDescriptor
    payload: tuple[int, ...]

    def __post_init__(self):
        if self.group.kind == FREE:
            for a, b in zip(self.payload, self.payload[1:]):
                if a == -b:
                    raise ValueError(f"word {self.payload} is not freely reduced")
            for i in self.payload:
                if not 1 <= abs(i) <= self.group.rank:
                    raise IndexOutOfRange(f"generator index {i} outside rank {self.group.rank}")
        elif len(self.payload) != self.group.rank:
            raise ValueError(f"vector of length {len(self.payload)} in {self.group}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    def __invert__(self) -> "GroupElement":
        return group_inv(self)

    def inverse(self) -> "GroupElement":
        return group_inv(self)

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else group_inv(self)
        out = self.group.identity()
        for _ in range(abs(k)):
            out = group_mul(out, base)
        return out

    @property
    def is_identity(self) -> bool:
        return not any(self.payload)

    @property
    def length(self) -> int:
        if self.group.kind == FREE:
            return len(self.payload)
        return sum(abs(x) for x in self.payload)

    def sort_key(self):
        """Length-lexicographic for words, lexicographic for vectors."""
        if self.group.kind == FREE:
            return (len(self.payload), tuple(_letter_key(i) for i in self.payload))
        return self.payload

    def __lt__(self, other: "GroupElement") -> bool:
        return self.sort_key() < other.sort_key()

    def abelianize(self) -> tuple[int, ...]:
        """Exponent-sum vector."""
        if self.group.kind == ABELIAN:
            return self.payload
        out = [0] * self.group.rank
        for i in self.payload:
            out[abs(i) - 1] += 1 if i > 0 else -1
        return tuple(out)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"GroupElement({self.group}, {format_element(self)})"


def _check_same(a: GroupElement, b: GroupElement):
    if a.group != b.group:
        raise DescriptorMismatch(f"{a.group} vs {b.group}")


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for i in letters:
        if stack and stack[-1] == -i:
            stack.pop()
        else:
            stack.append(i)
    return tuple(stack)


def reduce_word(letters: Sequence[int], group: GroupDescriptor) -> GroupElement:
    """Freely reduce a sequence of signed generator indices.

    >>> str(reduce_word([1, 2, -2, -1], FreeGroup(2)))
    'e'
    """
    if group.kind != FREE:
        raise DescriptorMismatch(f"reduce_word needs a free group, got {group}")
    for i in letters:
        if i == 0 or abs(i) > group.rank:
            raise IndexOutOfRange(f"generator index {i} outside rank {group.rank}")
    return GroupElement(group, _free_reduce(letters))


def vector(values: Sequence[int], group: GroupDescriptor) -> GroupElement:
    if group.kind != ABELIAN:
        raise DescriptorMismatch(f"vector needs a free abelian group, got {group}")
    return GroupElement(group, tuple(int(x) for x in values))


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a, b)
    if a.group.kind == FREE:
        return GroupElement(a.group, _free_reduce(a.payload + b.payload))
    return GroupElement(a.group, tuple(x + y for x, y in zip(a.payload, b.payload)))


def group_inv(a: GroupElement) -> GroupElement:
    if a.group.kind == FREE:
        return GroupElement(a.group, tuple(-i for i in reversed(a.payload)))
    return GroupElement(a.group, tuple(-x for x in a.payload))


@dataclass(frozen=True)
class Homomorphism:
    source: GroupDescriptor
    target: GroupDescriptor
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise ValueError(f"need {self.source.rank} generator images, got {len(self.images)}")
        for img in self.images:
            if img.group != self.target:
                raise DescriptorMismatch(f"image {img} not in {self.target}")

    def __call__(self, g: GroupElement) -> GroupElement:
        return hom_apply(self, g)

    @cached_property
    def _hash(self) -> int:
        return hash((self.source, self.target, self.images))

    def __hash__(self):
        return self._hash

    @classmethod
    def identity(cls, group: GroupDescriptor) -> "Homomorphism":
        return cls(group, group, tuple(group.generators()))

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[int]]) -> "Homomorphism":
        """Free abelian homomorphism acting on column vectors."""
        m = as_matrix(m)
        rows, cols = len(m), len(m[0])
        target = FreeAbelian(rows)
        images = tuple(GroupElement(target, tuple(m[i][j] for i in range(rows))) for j in range(cols))
        return cls(FreeAbelian(cols), target, images)

    @classmethod
    def from_words(cls, words: Sequence[Sequence[int]], group: GroupDescriptor) -> "Homomorphism":
        return cls(group, group, tuple(reduce_word(w, group) for w in words))

    def matrix(self) -> Matrix:
        """Abelianized matrix; column j is the exponent-sum image of generator j."""
        return self._matrix

    @cached_property
    def _matrix(self) -> Matrix:
        cols = [img.abelianize() for img in self.images]
        return tuple(tuple(col[i] for col in cols) for i in range(self.target.rank))

    def conjugated(self, a: GroupElement) -> "Homomorphism":
        """The homomorphism ``s -> a h(s) a^-1``."""
        a_inv = group_inv(a)
        return Homomorphism(
            self.source, self.target, tuple(group_mul(group_mul(a, img), a_inv) for img in self.images)
        )

    def abelianized(self) -> "Homomorphism":
        return Homomorphism.from_matrix(self.matrix())


def hom_apply(h: Homomorphism, g: GroupElement) -> GroupElement:
    if g.group != h.source:
        raise DescriptorMismatch(f"{g} is not in the source {h.source}")
    if h.source.kind == ABELIAN:
        if h.target.kind == ABELIAN:
            return GroupElement(h.target, mat_vec(h.matrix(), g.payload))
        out = h.target.identity()
        for img, k in zip(h.images, g.payload):
            out = group_mul(out, img ** k)
        return out
    if h.target.kind == ABELIAN:
        return GroupElement(h.target, mat_vec(h.matrix(), g.abelianize()))
    letters: list[int] = []
    for i in g.payload:
        img = h.images[abs(i) - 1].payload
        letters.extend(img if i > 0 else (-j for j in reversed(img)))
    return GroupElement(h.target, _free_reduce(letters))


def format_element(g: GroupElement) -> str:
    if g.group.kind == FREE:
        if not g.payload:
            return "e"
        return " ".join(f"x{i}" if i > 0 else f"X{-i}" for i in g.payload)
    return "(" + ",".join(str(x) for x in g.payload) + ")"


def parse_word_tokens(tokens: Sequence[str], group: GroupDescriptor) -> GroupElement:
    letters = []
    for tok in tokens:
        if tok in ("e", "1"):
            continue
        if len(tok) < 2 or tok[0] not in "xX" or not tok[1:].isdigit():
            raise ParseError(f"bad generator token {tok!r}")
        i = int(tok[1:])
        letters.append(i if tok[0] == "x" else -i)
    return reduce_word(letters, group)


def parse_element(text: str, group: GroupDescriptor) -> GroupElement:
    """Inverse of :func:`format_element`."""
    text = text.strip()
    if group.kind == ABELIAN:
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError(f"expected a vector like (1,-2), got {text!r}")
        try:
            values = [int(x) for x in text[1:-1].split(",") if x.strip()]
        except ValueError as exc:
            raise ParseError(f"bad vector {text!r}") from exc
        if len(values) != group.rank:
            raise ParseError(f"vector {text!r} has length {len(values)}, expected {group.rank}")
        return vector(values, group)
    return parse_word_tokens(text.split(), group)
