"""Integer partitions, their conjugates and hook lengths.

Partitions are plain tuples of weakly decreasing positive ints; strict
partitions are strictly decreasing.  Tuples are immutable and hashable, so
they can be shared freely across threads and used as cache keys.  All
enumeration here is streaming: nothing ever materialises the full list of
partitions of n.
"""

from __future__ import annotations

from typing import Iterator


def validate_partition(parts) -> tuple[int, ...]:
    """Return ``parts`` as a tuple, checking the partition invariants.

    Raises ValueError unless all parts are positive integers in weakly
    decreasing order.  The empty tuple (the one partition of 0) is valid.
    """
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
    return parts


def validate_strict_partition(parts) -> tuple[int, ...]:
    """Like :func:`validate_partition` but parts must strictly decrease."""
    parts = validate_partition(parts)
    for i in range(1, len(parts)):
        if parts[i - 1] == parts[i]:
            raise ValueError(f"strict partition has repeated part: {parts!r}")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every partition of ``n`` (parts <= ``max_part``) exactly once.

    Order is descending lexicographic, e.g. for n=4: (4), (3,1), (2,2),
    (2,1,1), (1,1,1,1).  The sub-stream with first part exactly k is
    ``(k,) + mu`` for mu in ``partitions(n - k, max_part=k)``, so consumers
    may split the range by first part and merge, independent of the split.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_part < 1:
        return
    # greedy initial partition, then in-place successor steps
    q, r = divmod(n, max_part)
    cur = [max_part] * q + ([r] if r else [])
    yield tuple(cur)
    while True:
        # rightmost part > 1; everything after it is a run of 1s
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(cur) - i  # the decremented unit plus the trailing 1s
        cur[i] -= 1
        part = cur[i]
        del cur[i + 1:]
        while rem > 0:
            nxt = min(part, rem)
            cur.append(nxt)
            rem -= nxt
        yield tuple(cur)


def strict_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every strictly decreasing partition of ``n``, descending lex.

    For n=5: (5), (4,1), (3,2).
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(rem: int, mx: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield prefix
            return
        # largest next part first keeps descending lex order
        for k in range(min(mx, rem), 0, -1):
            # the tail 1+2+...+(k-1) must be able to absorb rem-k
            if rem - k <= k * (k - 1) // 2:
                yield from rec(rem - k, k - 1, prefix + (k,))

    yield from rec(n, n, ())


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose the Young diagram: entry j counts the parts >= j+1."""
    if not parts:
        return ()
    out = [0] * parts[0]
    for p in parts:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def is_self_conjugate(parts: tuple[int, ...]) -> bool:
    return conjugate(parts) == tuple(parts)


def column_counts(parts: tuple[int, ...]) -> list[int]:
    """conjugate(parts) as a list, computed in O(n) by suffix-summing."""
    if not parts:
        return []
    counts = [0] * (parts[0] + 1)
    for p in parts:
        counts[p] += 1
    out = [0] * parts[0]
    acc = 0
    for j in range(parts[0], 0, -1):
        acc += counts[j]
        out[j - 1] = acc
    return out


def hook_lengths(parts: tuple[int, ...]) -> tuple[int, ...]:
    """All n hook lengths of the diagram, in row-major cell order.

    The hook of cell (i, j) is arm + leg + 1, i.e.
    parts[i] - j + conjugate(parts)[j] - i - 1 with 0-based i, j.
    """
    cols = column_counts(parts)
    out = []
    for i, lam in enumerate(parts, start=1):
        for j in range(1, lam + 1):
            out.append(lam - j + cols[j - 1] - i + 1)
    return tuple(out)


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence (exact, any size).

    Serves as an independent count oracle for :func:`partitions`.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def bounded_partition_counts(n: int) -> list[list[int]]:
    """DP table t[m][k] = number of partitions of m with parts <= k.

    Used to pre-size kernel buffers when enumerating by first part;
    t[n][n] doubles as another p(n) cross-check.
    """
    t = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        t[0][k] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            t[m][k] = t[m][k - 1] + (t[m - k][min(k, m - k)] if m >= k else 0)
    return t
