"""Permutations in one-line notation, involutions, and exact pattern counting.

A permutation of length n is any sequence of the integers 1..n, each
appearing exactly once; functions return them as tuples.  The empty
permutation ``()`` is legal everywhere.

This module is the ground truth for the rest of the package: it counts
pattern occurrences by explicit subsequence enumeration and enumerates
involutions exhaustively, so every closed-form count elsewhere can be
checked against it.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

#: Largest n accepted by the involution enumerator unless the caller raises it.
#: |I_14| is about 2.4 million; beyond that exhaustive sweeps stop being
#: interactive.
DEFAULT_INVOLUTION_CAP = 14

#: Largest n accepted by the S_n brute-force counter (n! blows up past this).
DEFAULT_SN_CAP = 9

# Involution lists up to this length are memoized; |I_12| = 140152 tuples.
_CACHE_MAX = 12

PATTERN_231 = (2, 3, 1)
PATTERN_312 = (3, 1, 2)


class CapExceededError(RuntimeError):
    """An exhaustive sweep was requested beyond the configured resource cap."""


def is_permutation(entries: Sequence[int]) -> bool:
    """True iff entries is a rearrangement of 1..n.

    >>> is_permutation((2, 1, 3)), is_permutation(()), is_permutation((1, 3))
    (True, True, False)
    """
    n = len(entries)
    seen = [False] * (n + 1)
    for v in entries:
        if not 1 <= v <= n or seen[v]:
            return False
        seen[v] = True
    return True


def check_permutation(entries: Sequence[int]) -> tuple[int, ...]:
    """Return entries as a tuple, raising ValueError if not a permutation."""
    p = tuple(entries)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def is_involution(p: Sequence[int]) -> bool:
    """True iff p composed with itself is the identity.

    >>> is_involution((4, 2, 3, 1))
    True
    >>> is_involution((2, 3, 1))
    False
    """
    return all(p[v - 1] == i + 1 for i, v in enumerate(p))


def reverse(p: Sequence[int]) -> tuple[int, ...]:
    """The entries of p in reverse order.

    >>> reverse((2, 3, 1))
    (1, 3, 2)
    """
    return tuple(reversed(p))


def _pattern_bounds(pattern: Sequence[int]) -> tuple[list[int], list[int]]:
    """For each pattern slot j, the earlier slot holding the tightest value
    bound from below / above, or -1 when unbounded on that side.

    With these, extending a partial match needs only two comparisons
    instead of comparing against every previously chosen entry.
    """
    k = len(pattern)
    lower = [-1] * k
    upper = [-1] * k
    for j in range(k):
        best_lo = best_hi = -1
        for i in range(j):
            if pattern[i] < pattern[j]:
                if best_lo < 0 or pattern[i] > pattern[best_lo]:
                    best_lo = i
            else:
                if best_hi < 0 or pattern[i] < pattern[best_hi]:
                    best_hi = i
        lower[j] = best_lo
        upper[j] = best_hi
    return lower, upper


def _count_occurrences(entries: Sequence[int], pattern: Sequence[int],
                       cap: int | None = None) -> int:
    """Number of index subsets of `entries` order-isomorphic to `pattern`.

    When `cap` is given, counting stops as soon as the total exceeds it and
    cap+1 is returned; callers testing "count == r" pass cap=r.
    """
    n = len(entries)
    k = len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    lower, upper = _pattern_bounds(pattern)
    chosen = [0] * k
    count = 0
    last = k - 1

    def extend(j: int, start: int) -> bool:
        nonlocal count
        lo = lower[j]
        hi = upper[j]
        lo_val = chosen[lo] if lo >= 0 else 0
        hi_val = chosen[hi] if hi >= 0 else n + 1
        for i in range(start, n - (last - j)):
            v = entries[i]
            if not lo_val < v < hi_val:
                continue
            if j == last:
                count += 1
                if cap is not None and count > cap:
                    return True
            else:
                chosen[j] = v
                if extend(j + 1, i + 1):
                    return True
        return False

    extend(0, 0)
    return count


def count_occurrences(p: Sequence[int], t: Sequence[int]) -> int:
    """Exact number of subsequences of p that are order-isomorphic to t.

    Zero means p avoids t.  The empty pattern occurs exactly once in
    anything.  |t| may exceed |p|, in which case the count is 0.

    >>> count_occurrences((4, 2, 3, 1), (2, 3, 1))
    1
    >>> count_occurrences((2, 1, 4, 5, 3, 8, 7, 6, 9), (3, 1, 2))
    0
    """
    return _count_occurrences(tuple(p), tuple(t))


def contains(p: Sequence[int], t: Sequence[int]) -> bool:
    """True iff p contains at least one occurrence of t."""
    return _count_occurrences(tuple(p), tuple(t), cap=0) > 0


def occurrence_profile(p: Sequence[int],
                       patterns: Iterable[Sequence[int]]) -> dict[tuple[int, ...], int]:
    """Exact occurrence count of each given pattern in p."""
    return {tuple(t): count_occurrences(p, t) for t in patterns}


def find_occurrence(p: Sequence[int], t: Sequence[int]) -> tuple[int, ...] | None:
    """Positions (1-based, increasing) of the first occurrence of t in p,
    scanning index subsets in lexicographic order; None if p avoids t."""
    n, k = len(p), len(t)
    if k == 0:
        return ()
    for idx in itertools.combinations(range(n), k):
        vals = [p[i] for i in idx]
        order = sorted(range(k), key=lambda j: vals[j])
        iso = [0] * k
        for rank, j in enumerate(order, start=1):
            iso[j] = rank
        if tuple(iso) == tuple(t):
            return tuple(i + 1 for i in idx)
    return None


def enumerate_involutions(n: int, cap: int = DEFAULT_INVOLUTION_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every involution of length n exactly once, in lexicographic
    order of one-line notation.

    Involutions are built by matching the smallest unassigned position to
    itself (fixed point) or to a later unassigned position (2-cycle), so
    the work is proportional to |I_n|, not n!.

    >>> list(enumerate_involutions(2))
    [(1, 2), (2, 1)]
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > cap:
        raise CapExceededError(
            f"involution enumeration capped at n={cap}, requested n={n}")
    assign = [0] * n

    def rec(p: int) -> Iterator[tuple[int, ...]]:
        while p < n and assign[p]:
            p += 1
        if p == n:
            yield tuple(assign)
            return
        assign[p] = p + 1
        yield from rec(p + 1)
        assign[p] = 0
        for q in range(p + 1, n):
            if not assign[q]:
                assign[p] = q + 1
                assign[q] = p + 1
                yield from rec(p + 1)
                assign[p] = 0
                assign[q] = 0

    return rec(0)


@lru_cache(maxsize=None)
def _involutions_tuple(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(enumerate_involutions(n))


def _involutions(n: int, cap: int) -> Iterable[tuple[int, ...]]:
    if n <= _CACHE_MAX:
        if n > cap:
            raise CapExceededError(
                f"involution enumeration capped at n={cap}, requested n={n}")
        return _involutions_tuple(n)
    return enumerate_involutions(n, cap)


@lru_cache(maxsize=None)
def _involutions_by_231_class(n: int) -> tuple[tuple[tuple[int, ...], ...],
                                               tuple[tuple[int, ...], ...]]:
    """(avoiders of 231, involutions with exactly one 231) among I_n.

    One shared pass with capped counting; this pair is what every sweep in
    the package keeps coming back to, so it is worth memoizing.
    """
    avoiders = []
    ones = []
    for p in _involutions(n, DEFAULT_INVOLUTION_CAP):
        c = _count_occurrences(p, PATTERN_231, cap=1)
        if c == 0:
            avoiders.append(p)
        elif c == 1:
            ones.append(p)
    return tuple(avoiders), tuple(ones)


def involutions_avoiding_231(n: int) -> tuple[tuple[int, ...], ...]:
    """All involutions of length n with no 231 occurrence (cached)."""
    return _involutions_by_231_class(n)[0]


def involutions_with_one_231(n: int) -> tuple[tuple[int, ...], ...]:
    """All involutions of length n with exactly one 231 occurrence (cached)."""
    return _involutions_by_231_class(n)[1]


Constraint = tuple[Sequence[int], int]


def oracle_count(n: int, constraints: Iterable[Constraint],
                 cap: int = DEFAULT_INVOLUTION_CAP) -> int:
    """Number of involutions of length n satisfying every constraint.

    Each constraint is a pair (pattern, r) demanding exactly r occurrences
    of the pattern; r = 0 demands avoidance.  Constraints are conjunctive.
    Everything is counted directly from the definitions, which is what
    makes this the oracle the formula modules are tested against.

    >>> oracle_count(3, [((2, 3, 1), 0)])
    4
    >>> oracle_count(5, [((2, 3, 1), 1)])
    2
    """
    checked: list[tuple[tuple[int, ...], int]] = []
    for pat, req in constraints:
        if req < 0:
            raise ValueError("required occurrence count must be nonnegative")
        checked.append((check_permutation(pat), req))

    base: Iterable[tuple[int, ...]] | None = None
    rest = checked
    if n <= _CACHE_MAX:
        for i, (pat, req) in enumerate(checked):
            if pat == PATTERN_231 and req in (0, 1):
                base = _involutions_by_231_class(n)[req]
                rest = checked[:i] + checked[i + 1:]
                break
    if base is None:
        base = _involutions(n, cap)

    total = 0
    for p in base:
        if all(_count_occurrences(p, pat, cap=req) == req for pat, req in rest):
            total += 1
    return total


def oracle_count_sn(n: int, constraints: Iterable[Constraint],
                    cap: int = DEFAULT_SN_CAP) -> int:
    """Like oracle_count but over all of S_n (n! candidates, so capped low)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > cap:
        raise CapExceededError(
            f"S_n brute force capped at n={cap}, requested n={n}")
    checked = [(check_permutation(pat), req) for pat, req in constraints]
    for _, req in checked:
        if req < 0:
            raise ValueError("required occurrence count must be nonnegative")
    total = 0
    for p in itertools.permutations(range(1, n + 1)):
        if all(_count_occurrences(p, pat, cap=req) == req for pat, req in checked):
            total += 1
    return total
