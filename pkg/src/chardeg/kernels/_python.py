"""Pure-Python degree scan: hook product and exact division of n!.

This is the reference semantics for character degrees.  The numba kernel
must produce identical counts; the two paths cross-check each other in
the test suite.
"""

from __future__ import annotations

import math

from ..partitions import column_counts, partitions

name = "python"


def make_context(n: int) -> int:
    return math.factorial(n)


def scan_first_part(n: int, first: int, ctx: int) -> tuple[dict[int, int], dict[int, int]]:
    """Degree counts over canonical partitions of n with first part ``first``.

    Canonical means lam <= conjugate(lam) lexicographically, so each
    conjugate pair is visited once and self-conjugate partitions are
    recognised.  Returns (pair_counts, self_counts).
    """
    pairs: dict[int, int] = {}
    selfs: dict[int, int] = {}
    fact_n = ctx
    for tail in partitions(n - first, max_part=first):
        lam = (first,) + tail
        cols = column_counts(lam)
        r = len(lam)
        # lex-compare lam with its conjugate; equal prefixes of unequal
        # length cannot happen (both sum to n)
        self_conjugate = True
        skip = False
        for j in range(min(r, first)):
            if lam[j] != cols[j]:
                self_conjugate = False
                skip = lam[j] > cols[j]
                break
        if skip:
            continue
        prod = 1
        for i, lam_i in enumerate(lam, start=1):
            for j in range(1, lam_i + 1):
                prod *= lam_i - j + cols[j - 1] - i + 1
        f, rem = divmod(fact_n, prod)
        if rem:
            raise ArithmeticError(f"hook product does not divide {n}! for {lam}")
        bucket = selfs if self_conjugate else pairs
        bucket[f] = bucket.get(f, 0) + 1
    return pairs, selfs
