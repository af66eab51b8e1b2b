"""Group tags and degree-set containers shared across the engine modules."""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum


class GroupKind(Enum):
    SYMMETRIC = "S"
    ALTERNATING = "A"
    COVER_SYMMETRIC_FAITHFUL = "2S"
    COVER_ALTERNATING_FAITHFUL = "2A"


_COVERS = (GroupKind.COVER_SYMMETRIC_FAITHFUL, GroupKind.COVER_ALTERNATING_FAITHFUL)


@dataclass(frozen=True, order=True)
class GroupTag:
    """A symmetric/alternating group of degree n, or the faithful part of
    its double cover (cover tags require n >= 4)."""

    kind: GroupKind
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"group degree must be >= 1, got {self.n}")
        if self.kind in _COVERS and self.n < 4:
            raise ValueError(f"cover tags require n >= 4, got {self.n}")

    @property
    def is_cover(self) -> bool:
        return self.kind in _COVERS

    @property
    def order(self) -> int:
        """|S_n|, |A_n|, |2.S_n| or |2.A_n| (A_1 is the trivial group)."""
        fact = math.factorial(self.n)
        if self.kind is GroupKind.SYMMETRIC:
            return fact
        if self.kind is GroupKind.ALTERNATING:
            return fact // 2 if self.n >= 2 else 1
        if self.kind is GroupKind.COVER_SYMMETRIC_FAITHFUL:
            return 2 * fact
        return fact

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.n}"

    @classmethod
    def parse(cls, kind: str, n: int) -> "GroupTag":
        """Build a tag from the short kind string S / A / 2S / 2A."""
        try:
            return cls(GroupKind(kind), n)
        except ValueError as exc:
            if "is not a valid" in str(exc):
                raise ValueError(f"unknown group kind {kind!r} (expected S, A, 2S or 2A)")
            raise


def symmetric(n: int) -> GroupTag:
    return GroupTag(GroupKind.SYMMETRIC, n)


def alternating(n: int) -> GroupTag:
    return GroupTag(GroupKind.ALTERNATING, n)


def cover_symmetric(n: int) -> GroupTag:
    return GroupTag(GroupKind.COVER_SYMMETRIC_FAITHFUL, n)


def cover_alternating(n: int) -> GroupTag:
    return GroupTag(GroupKind.COVER_ALTERNATING_FAITHFUL, n)


@dataclass(frozen=True)
class DegreeSet:
    """Sorted, deduplicated character degrees of a group, with optional
    per-degree character counts (aligned with ``degrees``)."""

    group: GroupTag
    degrees: tuple[int, ...]
    multiplicities: tuple[int, ...] | None = None

    def __post_init__(self):
        d = self.degrees
        if any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
            raise ValueError("degrees must be strictly increasing")
        if d and d[0] < 1:
            raise ValueError("degrees must be positive")
        m = self.multiplicities
        if m is not None:
            if len(m) != len(d):
                raise ValueError("multiplicities must align with degrees")
            if any(c < 1 for c in m):
                raise ValueError("multiplicities must be positive")

    def __contains__(self, value: int) -> bool:
        i = bisect_left(self.degrees, value)
        return i < len(self.degrees) and self.degrees[i] == value

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def has_multiplicity(self) -> bool:
        return self.multiplicities is not None

    def without_multiplicity(self) -> "DegreeSet":
        if self.multiplicities is None:
            return self
        return DegreeSet(self.group, self.degrees)

    def multiplicity(self, value: int) -> int:
        """Number of irreducible characters of this degree (0 if absent)."""
        if self.multiplicities is None:
            raise ValueError("degree set carries no multiplicities")
        i = bisect_left(self.degrees, value)
        if i < len(self.degrees) and self.degrees[i] == value:
            return self.multiplicities[i]
        return 0

    def class_count(self) -> int:
        if self.multiplicities is None:
            raise ValueError("degree set carries no multiplicities")
        return sum(self.multiplicities)

    def sum_of_squares(self) -> int:
        if self.multiplicities is None:
            raise ValueError("degree set carries no multiplicities")
        return sum(m * d * d for d, m in zip(self.degrees, self.multiplicities))


@dataclass(frozen=True)
class MinimalDegreeTable:
    """The k smallest degrees above 1, ascending: entries[i-1] = d_i."""

    group: GroupTag
    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("entries must be strictly increasing")
        if e and e[0] <= 1:
            raise ValueError("entries must exceed 1")

    def d(self, i: int) -> int:
        """The i-th smallest nontrivial degree, 1-based."""
        return self.entries[i - 1]


@dataclass(frozen=True)
class QuotientSet:
    """All chi(1)/index over chi in Irr(A_n) with index | chi(1), sorted."""

    n: int
    index: int
    values: tuple[int, ...] = field(default=())

    def __contains__(self, value: int) -> bool:
        i = bisect_left(self.values, value)
        return i < len(self.values) and self.values[i] == value

    def __len__(self) -> int:
        return len(self.values)
