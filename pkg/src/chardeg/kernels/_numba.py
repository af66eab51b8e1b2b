"""Jit-compiled degree scan.

The inner loop enumerates partitions as int64 arrays and accumulates, per
canonical partition, the exponent vector of its degree over the primes
<= n (exponent of p in n! minus the exponents in the hook lengths).
Exponents fit comfortably in int16 for any feasible n.  Degrees are then
rebuilt exactly in Python from the deduplicated exponent rows, so no
arbitrary-precision value ever crosses the jit boundary.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from ..partitions import bounded_partition_counts

name = "numba"


@njit(cache=True)
def _chunk_exponents(n, first, exp_table, fact_exps, nrows):
    nprimes = fact_exps.shape[0]
    exps = np.empty((nrows, nprimes), np.int16)
    self_flags = np.zeros(nrows, np.bool_)
    parts = np.empty(n + 1, np.int64)
    conj = np.empty(first + 1, np.int64)
    counts = np.empty(first + 2, np.int64)

    parts[0] = first
    rem = n - first
    # greedy initial tail: rem split into parts <= first
    r = 1
    while rem > 0:
        nxt = min(first, rem)
        parts[r] = nxt
        rem -= nxt
        r += 1

    out = 0
    while True:
        # column counts of the full partition (its conjugate)
        for j in range(first + 2):
            counts[j] = 0
        for i in range(r):
            counts[parts[i]] += 1
        acc = 0
        for j in range(first, 0, -1):
            acc += counts[j]
            conj[j - 1] = acc

        # canonical iff parts <= conj lexicographically; ties mean self-conjugate
        self_conjugate = True
        skip = False
        width = r if r < first else first
        for j in range(width):
            if parts[j] != conj[j]:
                self_conjugate = False
                skip = parts[j] > conj[j]
                break

        if not skip:
            for t in range(nprimes):
                exps[out, t] = fact_exps[t]
            for i in range(r):
                lam_i = parts[i]
                for j in range(lam_i):
                    h = lam_i - j + conj[j] - i - 1
                    for t in range(nprimes):
                        exps[out, t] -= exp_table[h, t]
            self_flags[out] = self_conjugate
            out += 1

        # successor of the tail parts[1:r] (bound first), descending lex
        i = r - 1
        while i >= 1 and parts[i] == 1:
            i -= 1
        if i < 1:
            break
        redo = r - i
        parts[i] -= 1
        cur = parts[i]
        r = i + 1
        while redo > 0:
            nxt = cur if cur < redo else redo
            parts[r] = nxt
            redo -= nxt
            r += 1

    return exps[:out], self_flags[:out]


class _Context:
    """Per-n lookup tables shared by all first-part chunks."""

    def __init__(self, n: int):
        self.n = n
        self.primes = _primes_upto(n)
        nprimes = len(self.primes)
        table = np.zeros((n + 1, max(nprimes, 1)), np.int16)
        for m in range(2, n + 1):
            v = m
            for t, p in enumerate(self.primes):
                while v % p == 0:
                    table[m, t] += 1
                    v //= p
        self.exp_table = table
        fact = np.zeros(max(nprimes, 1), np.int16)
        for t, p in enumerate(self.primes):
            q = p
            while q <= n:
                fact[t] += n // q
                q *= p
        self.fact_exps = fact
        self.chunk_rows = bounded_partition_counts(n)


def _primes_upto(n: int) -> list[int]:
    sieve = np.ones(n + 1, np.bool_)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def make_context(n: int) -> _Context:
    return _Context(n)


def scan_first_part(n: int, first: int, ctx: _Context) -> tuple[dict[int, int], dict[int, int]]:
    nrows = ctx.chunk_rows[n - first][min(first, n - first)] if n > first else 1
    exps, self_flags = _chunk_exponents(n, first, ctx.exp_table, ctx.fact_exps, nrows)
    pairs = _degree_counts(exps[~self_flags], ctx.primes)
    selfs = _degree_counts(exps[self_flags], ctx.primes)
    return pairs, selfs


def _degree_counts(exps: np.ndarray, primes: list[int]) -> dict[int, int]:
    """Rebuild exact degrees from exponent rows, deduplicating first."""
    if exps.shape[0] == 0:
        return {}
    rows, counts = np.unique(exps, axis=0, return_counts=True)
    out: dict[int, int] = {}
    for row, cnt in zip(rows, counts):
        d = 1
        for t, e in enumerate(row):
            if e:
                d *= primes[t] ** int(e)
        out[d] = out.get(d, 0) + int(cnt)
    return out
