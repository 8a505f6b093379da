"""k-generalized Fibonacci numbers and the bounded-tiling count they equal.

``fib_k(k, n)`` is the order-k recurrence that sums its previous k values,
with value 1 at index 1 and 0 at every index <= 0.  For k = 2 this is the
ordinary Fibonacci sequence.  The independent check is
``count_bounded_tilings``, which enumerates tilings of a 1 x n strip by
tiles of length at most k outright instead of using the recurrence; the
two must satisfy tilings(n, k) == fib_k(k, n + 1).
"""

from __future__ import annotations

_memo: dict[tuple[int, int], int] = {}


def fib_k(k: int, n: int) -> int:
    """The n-th order-k generalized Fibonacci number, exactly.

    Zero for all n <= 0, one at n = 1, then the sum of the k previous
    values.  k = 0 makes that sum empty, so the sequence is 1 at n = 1 and
    0 everywhere else.  Values are memoized; memo writes are idempotent,
    so concurrent use is safe.

    >>> [fib_k(2, n) for n in range(7)]
    [0, 1, 1, 2, 3, 5, 8]
    >>> fib_k(0, 1), fib_k(0, 5)
    (1, 0)
    >>> fib_k(7, -3)
    0
    """
    if k < 0:
        raise ValueError("order k must be nonnegative")
    if n <= 0:
        return 0
    if n == 1:
        return 1
    cached = _memo.get((k, n))
    if cached is not None:
        return cached
    # Fill iteratively from the bottom so deep indexes never recurse.
    value = 1
    for m in range(2, n + 1):
        key = (k, m)
        if key in _memo:
            value = _memo[key]
            continue
        acc = 0
        for i in range(1, k + 1):
            j = m - i
            if j <= 0:
                break
            acc += _memo[(k, j)] if j >= 2 else 1
        _memo[key] = acc
        value = acc
    return value


def count_bounded_tilings(n: int, k: int) -> int:
    """Number of tilings of a 1 x n strip with tiles of length 1..k.

    Counted by explicitly enumerating every tiling (equivalently every
    composition of n into parts <= k), deliberately not via the
    recurrence, so this can serve as an independent oracle for fib_k.

    >>> count_bounded_tilings(3, 2)
    3
    >>> count_bounded_tilings(0, 5)
    1
    """
    if n < 0:
        raise ValueError("strip length must be nonnegative")
    if k < 1:
        raise ValueError("max tile length must be positive")

    def tilings(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for part in range(1, min(k, remaining) + 1):
            total += tilings(remaining - part)
        return total

    return tilings(n)
