"""Faithful ("spin") character degrees of the double covers 2.S_n and 2.A_n.

Faithful irreducibles are labelled by strict partitions.  For a strict
partition lam of n with m parts the base quantity is

    h(lam) = n! / (lam_1! ... lam_m!) * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j)

which is always a positive integer, and the character degree is
2^floor((n-m)/2) * h(lam).  The parity of n - m decides how labels and
characters correspond:

* n - m odd:  two characters of 2.S_n of that degree; they restrict to a
  single character of 2.A_n.
* n - m even: one character of 2.S_n; it splits over 2.A_n into two
  characters of half the degree (the degree is even in this case).

The rule is validated in-repo by the sum-of-squares identities (the
faithful part of the regular representation) and small frozen cases, so
a wrong variant cannot pass the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groups import DegreeSet, GroupKind, GroupTag
from .partitions import strict_partitions, validate_strict_partition


@dataclass(frozen=True)
class SpinDegreeRecord:
    label: tuple[int, ...]
    cover: GroupTag
    degree: int
    multiplicity: int  # 1 or 2 characters carry this label at this degree


def bar_quotient(parts) -> int:
    """The integer h(lam) above.  Aborts if the division is inexact,
    which would signal an implementation bug, not bad input."""
    parts = validate_strict_partition(parts)
    n = sum(parts)
    if n == 0:
        return 1
    num = math.factorial(n)
    den = 1
    for p in parts:
        den *= math.factorial(p)
    m = len(parts)
    for i in range(m):
        for j in range(i + 1, m):
            num *= parts[i] - parts[j]
            den *= parts[i] + parts[j]
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"bar quotient not integral for {parts}")
    return q


def spin_degrees(cover: GroupTag) -> list[SpinDegreeRecord]:
    """One record per strict-partition label, in enumeration order."""
    if not cover.is_cover:
        raise ValueError(f"spin degrees require a cover tag, got {cover.label}")
    n = cover.n
    sym = cover.kind is GroupKind.COVER_SYMMETRIC_FAITHFUL
    records = []
    for lam in strict_partitions(n):
        m = len(lam)
        odd = (n - m) % 2 == 1
        d = (1 << ((n - m) // 2)) * bar_quotient(lam)
        if sym:
            records.append(SpinDegreeRecord(lam, cover, d, 2 if odd else 1))
        elif odd:
            records.append(SpinDegreeRecord(lam, cover, d, 1))
        else:
            if d % 2:
                raise ArithmeticError(
                    f"split spin degree {d} for {lam} is odd; degree data corrupt")
            records.append(SpinDegreeRecord(lam, cover, d // 2, 2))
    return records


def faithful_degree_set(cover: GroupTag) -> DegreeSet:
    """Deduplicated sorted faithful degrees, with character counts."""
    counts: dict[int, int] = {}
    for rec in spin_degrees(cover):
        counts[rec.degree] = counts.get(rec.degree, 0) + rec.multiplicity
    degs = tuple(sorted(counts))
    return DegreeSet(cover, degs, tuple(counts[d] for d in degs))
