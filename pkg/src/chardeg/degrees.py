"""Exact character degrees of S_n and A_n and queries over them.

Everything here is integer arithmetic; a division that comes out inexact
is an implementation bug and raises immediately instead of truncating.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import cdset, kernels
from .groups import (DegreeSet, GroupTag, MinimalDegreeTable, QuotientSet,
                     alternating, symmetric)
from .partitions import hook_lengths, validate_partition

_factorial = lru_cache(maxsize=128)(math.factorial)


def degree(parts) -> int:
    """Degree of the irreducible S_n-character labelled by ``parts``:
    n! divided by the product of all hook lengths (always exact)."""
    parts = validate_partition(parts)
    n = sum(parts)
    if n == 0:
        return 1
    prod = math.prod(hook_lengths(parts))
    f, rem = divmod(_factorial(n), prod)
    if rem:
        raise ArithmeticError(f"hook product does not divide {n}! for {parts}")
    return f


def divide_filter(values, q: int) -> tuple[int, ...]:
    """{v/q : v in values, q | v}, sorted and deduplicated."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return tuple(sorted({v // q for v in values if v % q == 0}))


def divisibility_maximal(values) -> tuple[int, ...]:
    """Elements of ``values`` not properly dividing another element."""
    vals = sorted(set(values))
    return tuple(v for v in vals if not any(w % v == 0 for w in vals if w > v))


@dataclass(frozen=True)
class DegreeStats:
    class_count: int
    largest_degree: int
    sum_of_squares: int


def _scan_task(args) -> tuple[dict[int, int], dict[int, int]]:
    kernel_name, n, firsts = args
    kern = kernels.get_kernel(kernel_name)
    ctx = kern.make_context(n)
    pairs: dict[int, int] = {}
    selfs: dict[int, int] = {}
    for first in firsts:
        p, s = kern.scan_first_part(n, first, ctx)
        for d, c in p.items():
            pairs[d] = pairs.get(d, 0) + c
        for d, c in s.items():
            selfs[d] = selfs.get(d, 0) + c
    return pairs, selfs


class DegreeEngine:
    """Computes and caches degree sets.

    The scan over partitions is split by first part into independent
    chunks; with ``workers`` > 1 the chunks run in a process pool.  The
    merge is a plain multiplicity sum, so the result is identical for
    any worker count.  When ``cache_dir`` is set, computed sets are
    persisted in the CDSET format and consulted before recomputing.
    """

    def __init__(self, cache_dir: str | os.PathLike | None = None,
                 workers: int = 1, kernel: str | None = None):
        if workers < 1:
            raise ValueError("workers must be >= 1")
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.workers = workers
        self.kernel = kernel if kernel is not None else kernels.default_kernel_name()
        self._sets: dict[GroupTag, DegreeSet] = {}

    # -- construction ---------------------------------------------------

    def degree_set(self, group: GroupTag, with_multiplicity: bool = False) -> DegreeSet:
        """cd(S_n) or cd(A_n), optionally with character counts per degree.

        For A_n each non-self-conjugate conjugate pair contributes its
        degree once; each self-conjugate partition contributes half its
        (necessarily even) degree twice.
        """
        if group.is_cover:
            raise ValueError("degree_set covers S_n/A_n only; use faithful_degree_set")
        full = self._full_set(group)
        return full if with_multiplicity else full.without_multiplicity()

    def faithful_degree_set(self, cover: GroupTag) -> DegreeSet:
        """Degrees of the faithful irreducible characters of 2.S_n / 2.A_n."""
        if not cover.is_cover:
            raise ValueError("faithful_degree_set is for cover tags")
        if cover not in self._sets:
            loaded = self._read_cache(cover)
            if loaded is not None:
                self._sets[cover] = loaded
            else:
                from . import spin
                built = spin.faithful_degree_set(cover)
                self._sets[cover] = built
                self._write_cache(built)
        return self._sets[cover]

    def _full_set(self, group: GroupTag) -> DegreeSet:
        if group in self._sets:
            return self._sets[group]
        loaded = self._read_cache(group)
        if loaded is not None:
            self._sets[group] = loaded
            return loaded
        n = group.n
        pairs, selfs = self._scan(n)
        for tag, counter in ((symmetric(n), self._symmetric_counts(pairs, selfs)),
                             (alternating(n), self._alternating_counts(n, pairs, selfs))):
            built = DegreeSet(tag, tuple(sorted(counter)),
                              tuple(counter[d] for d in sorted(counter)))
            self._sets[tag] = built
            self._write_cache(built)
        return self._sets[group]

    @staticmethod
    def _symmetric_counts(pairs, selfs) -> dict[int, int]:
        counts = {d: 2 * c for d, c in pairs.items()}
        for d, c in selfs.items():
            counts[d] = counts.get(d, 0) + c
        return counts

    @staticmethod
    def _alternating_counts(n, pairs, selfs) -> dict[int, int]:
        if n == 1:
            return {1: 1}  # trivial group; the halving rule needs n >= 2
        counts = dict(pairs)
        for d, c in selfs.items():
            if d % 2:
                raise ArithmeticError(
                    f"self-conjugate degree {d} is odd for n={n}; degree data corrupt")
            half = d // 2
            counts[half] = counts.get(half, 0) + 2 * c
        return counts

    def _scan(self, n: int) -> tuple[dict[int, int], dict[int, int]]:
        firsts = list(range(n, 0, -1))
        if self.workers == 1 or n < 20:
            return _scan_task((self.kernel, n, firsts))
        chunks = [firsts[i:: self.workers] for i in range(self.workers)]
        pairs: dict[int, int] = {}
        selfs: dict[int, int] = {}
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            for p, s in pool.map(_scan_task,
                                 [(self.kernel, n, chunk) for chunk in chunks]):
                for d, c in p.items():
                    pairs[d] = pairs.get(d, 0) + c
                for d, c in s.items():
                    selfs[d] = selfs.get(d, 0) + c
        return pairs, selfs

    # -- disk cache ------------------------------------------------------

    def _cache_path(self, group: GroupTag) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{group.kind.value}_{group.n}_mult.cdset"

    def _read_cache(self, group: GroupTag) -> DegreeSet | None:
        path = self._cache_path(group)
        if path is None or not path.exists():
            return None
        # a corrupt cache is an error, never a silent recompute
        loaded = cdset.read(path)
        if loaded.group != group or not loaded.has_multiplicity:
            raise cdset.CdsetError(
                f"{path}: file describes {loaded.group.label}, expected {group.label}")
        return loaded

    def _write_cache(self, ds: DegreeSet) -> None:
        path = self._cache_path(ds.group)
        if path is None or path.exists():
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        cdset.write(ds, path)

    # -- queries ----------------------------------------------------------

    def _set_for(self, group: GroupTag) -> DegreeSet:
        if group.is_cover:
            return self.faithful_degree_set(group)
        return self._full_set(group)

    def is_degree(self, group: GroupTag, value: int) -> bool:
        if value < 1:
            raise ValueError("degrees are positive")
        return value in self._set_for(group)

    def minimal_degrees(self, group: GroupTag, k: int) -> MinimalDegreeTable:
        """The k smallest degrees exceeding 1, ascending."""
        if k < 1:
            raise ValueError("k must be >= 1")
        degs = self._set_for(group).degrees
        start = 1 if degs and degs[0] == 1 else 0
        if len(degs) - start < k:
            raise ValueError(
                f"{group.label} has only {len(degs) - start} nontrivial degrees, wanted {k}")
        return MinimalDegreeTable(group, degs[start: start + k])

    def prime_power_degrees(self, group: GroupTag) -> tuple[int, ...]:
        """All degrees > 1 of the form q^e, q prime.

        Every degree divides the group order, so stripping the primes up
        to n factors it completely.
        """
        from .numtheory import primes_upto
        ps = primes_upto(max(group.n, 2))
        out = []
        for d in self._set_for(group).degrees:
            if d == 1:
                continue
            v = d
            distinct = 0
            for p in ps:
                if v % p == 0:
                    distinct += 1
                    while v % p == 0:
                        v //= p
                if v == 1:
                    break
            if v == 1 and distinct == 1:
                out.append(d)
        return tuple(out)

    def stats(self, group: GroupTag) -> DegreeStats:
        ds = self._set_for(group) if group.is_cover else self.degree_set(group, True)
        return DegreeStats(class_count=ds.class_count(),
                           largest_degree=ds.degrees[-1],
                           sum_of_squares=ds.sum_of_squares())

    def quotient_set(self, n: int, index: int) -> QuotientSet:
        """{chi(1)/index : chi in Irr(A_n), index | chi(1)}, sorted."""
        if n < 5:
            raise ValueError("quotient sets are defined for n >= 5")
        if index < 1:
            raise ValueError("index must be >= 1")
        degs = self.degree_set(alternating(n)).degrees
        return QuotientSet(n, index, divide_filter(degs, index))
