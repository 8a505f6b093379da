"""Closed-form counts and generating functions for restricted involutions.

Two families run through everything here:

* the "avoid231" family: involutions with no 231 occurrence, refined by
  how many times they contain a second pattern;
* the "one231" family: involutions with exactly one 231 occurrence,
  refined the same way.

Patterns come in two flavors: the decreasing pattern k..21 (a single
block of size k) and a general layered pattern given as a composition.
Every operation returns exact integers or exact truncated series, and
each has a matching brute-force path in `perms`/`layered` that the test
suite compares against.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .fibonacci import fib_k
from .layered import Composition, check_composition, gap_caps
from .series import BiSeries, DEFAULT_TRUNC, UniSeries, geom_denominator


def choose(a: int, b: int) -> int:
    """Binomial coefficient with the conventions the formulas here rely on:
    choosing nothing always counts 1 (even from a negative pool), and any
    other out-of-range pair counts 0."""
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`.

    >>> sorted(weak_compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if parts < 0:
        raise ValueError("parts must be nonnegative")
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Decreasing blocks over an increasing run over decreasing blocks, and the
# count of 132/213-avoiders that also avoid one of those shapes.
# ---------------------------------------------------------------------------

def build_dec_inc_dec(a: int, b: int, c: int) -> tuple[int, ...]:
    """The permutation of length a+b+c made of a decreasing run of its a
    largest values, then an increasing run of the b middle values, then a
    decreasing run of the c smallest values.

    >>> build_dec_inc_dec(1, 2, 1)
    (4, 2, 3, 1)
    """
    if min(a, b, c) < 1:
        raise ValueError("all three block sizes must be positive")
    total = a + b + c
    entries = list(range(total, b + c, -1))
    entries.extend(range(c + 1, b + c + 1))
    entries.extend(range(c, 0, -1))
    return tuple(entries)


def count_avoid_132_213_dec_inc_dec(n: int, a: int, b: int, c: int) -> int:
    """Number of permutations of length n avoiding 132, 213, and the
    dec/inc/dec pattern with block sizes (a, b, c), by the binomial and
    generalized-Fibonacci sum.  Implemented exactly as the sum is written;
    the brute-force S_n oracle pins the small-n boundary behavior."""
    if min(a, b, c) < 1:
        raise ValueError("all three block sizes must be positive")
    if n < 0:
        raise ValueError("length must be nonnegative")
    head = sum(choose(n - 1, k - 1) for k in range(1, a + c))
    tail = sum(choose(k - 1, a + c - 1) * fib_k(b - 1, n - k + 1)
               for k in range(a + c, n + 1))
    return head + tail


# ---------------------------------------------------------------------------
# Avoid 231, refined by occurrences of the decreasing pattern k..21.
# ---------------------------------------------------------------------------

def _tile_denominator_xy(k: int, trunc: int) -> BiSeries:
    """1 - sum_j x^j y^C(j, k), the tile inventory with y marking how many
    size-k decreasing patterns a block of length j carries."""
    terms = [(0, 0, 1)]
    terms.extend((j, choose(j, k), -1) for j in range(1, trunc + 1))
    return BiSeries.from_terms(terms, trunc)


def gf_avoid231_contain_k21_xy(k: int, trunc: int = DEFAULT_TRUNC) -> BiSeries:
    """Bivariate series whose x^n y^r coefficient counts 231-avoiding
    involutions of length n containing the pattern k..21 exactly r times."""
    if k < 1:
        raise ValueError("pattern size k must be positive")
    return _tile_denominator_xy(k, trunc).reciprocal()


def count_avoid231_contain_k21(n: int, k: int, r: int) -> int:
    """|{231-avoiding involutions of length n with exactly r occurrences of
    k..21}| via the gap sum: place the r blocks of size exactly k, then
    fill the r+1 gaps with blocks of length < k.

    Only asserted for 0 <= r <= k; other r are rejected (use the bivariate
    series for those).
    """
    if k < 1:
        raise ValueError("pattern size k must be positive")
    if not 0 <= r <= k:
        raise ValueError(f"gap formula needs 0 <= r <= k, got r={r}, k={k}")
    if n < 0:
        raise ValueError("length must be nonnegative")
    total = 0
    for gaps in weak_compositions(n - k * r, r + 1):
        prod = 1
        for s in gaps:
            prod *= fib_k(k - 1, s + 1)
            if prod == 0:
                break
        total += prod
    return total


def gf_avoid231_contain_k21(k: int, r: int,
                            trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Closed-form series x^(kr) / (1 - x - ... - x^(k-1))^(r+1)."""
    if k < 1:
        raise ValueError("pattern size k must be positive")
    if not 0 <= r <= k:
        raise ValueError(f"closed form needs 0 <= r <= k, got r={r}, k={k}")
    inv = geom_denominator(k - 1, trunc).reciprocal()
    return UniSeries.x_power(k * r, trunc) * inv ** (r + 1)


# ---------------------------------------------------------------------------
# Avoid 231, contain a general layered pattern exactly once.
# ---------------------------------------------------------------------------

def count_avoid231_once_layered(n: int, pat: Sequence[int]) -> int:
    """|{231-avoiding involutions of length n containing the layered
    pattern exactly once}|: the pattern blocks are pinned, and each gap
    takes blocks no longer than its cap."""
    caps = gap_caps(pat)
    body = sum(pat)
    if n < 0:
        raise ValueError("length must be nonnegative")
    total = 0
    for gaps in weak_compositions(n - body, len(caps)):
        prod = 1
        for cap, s in zip(caps, gaps):
            prod *= fib_k(cap, s + 1)
            if prod == 0:
                break
        total += prod
    return total


def gf_avoid231_once_layered(pat: Sequence[int],
                             trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Series form of count_avoid231_once_layered: x^(sum of blocks) times
    one geometric factor per gap."""
    caps = gap_caps(pat)
    result = UniSeries.x_power(sum(pat), trunc)
    for cap in caps:
        result = result * geom_denominator(cap, trunc).reciprocal()
    return result


def count_avoid231_once_ones_block(n: int, k: int, l: int) -> int:
    """231-avoiding involutions of length n with exactly one occurrence of
    the layered pattern made of k singleton blocks then one block of size
    l.  Collapses to a single generalized Fibonacci number.

    >>> count_avoid231_once_ones_block(8, 1, 4)
    4
    """
    if k < 1 or l < 1:
        raise ValueError("need k >= 1 and l >= 1")
    return fib_k(l - 1, n - k - l + 1)


# ---------------------------------------------------------------------------
# Avoid 231 and avoid a layered pattern (no closed form; exact sweep).
# ---------------------------------------------------------------------------

def _avoid_layered_counts(pat: Composition, n_max: int) -> list[int]:
    """Counts of compositions of 0..n_max containing no block subsequence
    that dominates `pat` part-by-part.

    Containment of a layered pattern only depends on such a dominating
    subsequence existing, and greedy matching finds one iff one exists, so
    a dynamic program over (total, greedy prefix length) replaces the
    2^(n-1) composition sweep without changing a single count.
    """
    m = len(pat)
    if m == 0:
        # Everything contains the empty pattern once, so nothing avoids it.
        return [0] * (n_max + 1)
    state = [[0] * m for _ in range(n_max + 1)]
    state[0][0] = 1
    for n in range(1, n_max + 1):
        row = state[n]
        for length in range(1, n + 1):
            prev = state[n - length]
            for q in range(m):
                ways = prev[q]
                if ways:
                    nxt = q + 1 if length >= pat[q] else q
                    if nxt < m:
                        row[nxt] += ways
    return [sum(row) for row in state]


def count_avoid231_avoid_layered(n: int, pat: Sequence[int]) -> int:
    """|{involutions of length n avoiding both 231 and the layered
    pattern}|, by exact composition-level counting."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return _avoid_layered_counts(check_composition(pat), n)[n]


def gf_avoid231_avoid_layered(pat: Sequence[int],
                              trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Series of count_avoid231_avoid_layered; no closed form is known for
    a general layered pattern, so the coefficients are computed outright."""
    counts = _avoid_layered_counts(check_composition(pat), trunc)
    return UniSeries(trunc, tuple(counts))


# ---------------------------------------------------------------------------
# Exactly one 231.
# ---------------------------------------------------------------------------

def count_one231(n: int) -> int:
    """Number of involutions of length n containing exactly one 231.

    The closed form (n-1) * 2^(n-6) holds for n >= 5; the smaller sizes
    are pinned by exhaustive classification (0, 0, 0, 0, 1).

    >>> [count_one231(n) for n in range(9)]
    [0, 0, 0, 0, 1, 2, 5, 12, 28]
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n < 4:
        return 0
    if n == 4:
        return 1
    # (n-1) * 2^(n-6), kept integral at n = 5 where the power is -1.
    return (n - 1) * 2 ** (n - 5) // 2


def count_one231_avoid_k21(n: int, k: int) -> int:
    """Involutions of length n with exactly one 231 and no k..21.

    Needs k >= 4: a single 231 inside an involution always sits inside a
    4231, so for k <= 3 the count is identically zero and the convolution
    below is not asserted.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if n < 0:
        raise ValueError("length must be nonnegative")
    return sum(fib_k(k - 1, i + 1) * fib_k(k - 1, n - i - 3)
               for i in range(0, n - 3))


def gf_one231_avoid_k21(k: int, trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Closed-form series x^4 / (1 - x - ... - x^(k-1))^2."""
    if k < 4:
        raise ValueError("k must be at least 4")
    inv = geom_denominator(k - 1, trunc).reciprocal()
    return UniSeries.x_power(4, trunc) * inv * inv


def gf_one231_avoid_layered(pat: Sequence[int],
                            trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Series counting involutions with exactly one 231 that avoid the
    layered pattern, built by peeling blocks off the right end.

    Appending a block of size l multiplies in 1/(1-x-...-x^(l-1)) and
    combines the shorter-pattern series with an avoidance series: for
    l <= 3 the avoidance factor uses the pattern without its last block,
    for l >= 4 the whole pattern.  The empty pattern is the recursion
    base, with value 0 (nothing avoids the empty pattern).
    """
    pattern = check_composition(pat)
    result = UniSeries.zero(trunc)
    x4 = UniSeries.x_power(4, trunc)
    tail = geom_denominator(1, trunc).reciprocal()  # 1/(1-x)
    for i, block in enumerate(pattern):
        inv_geom = geom_denominator(block - 1, trunc).reciprocal()
        avoid_upto = i + 1 if block >= 4 else i
        avoid = gf_avoid231_avoid_layered(pattern[:avoid_upto], trunc)
        result = inv_geom * (UniSeries.x_power(block, trunc) * tail * result
                             + x4 * avoid)
    return result


def gf_one231_contain_k21_xy(k: int, trunc: int = DEFAULT_TRUNC) -> BiSeries:
    """Bivariate series whose x^n y^r coefficient counts involutions of
    length n with exactly one 231 and exactly r occurrences of k..21."""
    if k < 4:
        raise ValueError("k must be at least 4")
    inv = _tile_denominator_xy(k, trunc).reciprocal()
    return BiSeries.from_terms([(4, 0, 1)], trunc) * inv * inv


def count_one231_contain_k21(n: int, k: int, r: int) -> int:
    """Involutions of length n with exactly one 231 and exactly r
    occurrences of k..21, via the gap sum with r pinned size-k blocks, the
    one special length-4 block, and r+2 bounded gaps."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if not 0 <= r <= k:
        raise ValueError(f"gap formula needs 0 <= r <= k, got r={r}, k={k}")
    if n < 0:
        raise ValueError("length must be nonnegative")
    total = 0
    for gaps in weak_compositions(n - k * r - 4, r + 2):
        prod = 1
        for s in gaps:
            prod *= fib_k(k - 1, s + 1)
            if prod == 0:
                break
        total += prod
    return (r + 1) * total


def gf_one231_contain_k21(k: int, r: int,
                          trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Closed-form series (r+1) x^(kr+4) / (1 - x - ... - x^(k-1))^(r+2)."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if not 0 <= r <= k:
        raise ValueError(f"closed form needs 0 <= r <= k, got r={r}, k={k}")
    inv = geom_denominator(k - 1, trunc).reciprocal()
    return UniSeries.x_power(k * r + 4, trunc) * inv ** (r + 2) * (r + 1)


def gf_one231_once_layered(pat: Sequence[int],
                           trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """Series counting involutions with exactly one 231 and exactly one
    occurrence of the layered pattern.

    Seeded at single blocks from the closed form (0 for blocks of size
    <= 3, the r = 1 gap formula otherwise), then one block peeled per
    step: size <= 3 multiplies by x^l/(1-x-...-x^(l-1)); size >= 4 also
    adds the exactly-once avoidance series of the pattern so far.
    """
    pattern = check_composition(pat)
    if not pattern:
        raise ValueError("pattern must be nonempty")
    first = pattern[0]
    if first <= 3:
        result = UniSeries.zero(trunc)
    else:
        result = gf_one231_contain_k21(first, 1, trunc)
    x4 = UniSeries.x_power(4, trunc)
    for i in range(1, len(pattern)):
        block = pattern[i]
        inv_geom = geom_denominator(block - 1, trunc).reciprocal()
        if block <= 3:
            result = UniSeries.x_power(block, trunc) * inv_geom * result
        else:
            once = gf_avoid231_once_layered(pattern[: i + 1], trunc)
            result = inv_geom * (UniSeries.x_power(block, trunc) * result
                                 + x4 * once)
    return result


# ---------------------------------------------------------------------------
# Plain generalized-Fibonacci series.
# ---------------------------------------------------------------------------

def gf_fib_k(k: int, trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """x / (1 - x - x^2 - ... - x^k), whose x^n coefficient is fib_k(k, n)."""
    if k < 1:
        raise ValueError("order k must be positive")
    return UniSeries.x_power(1, trunc) * geom_denominator(k, trunc).reciprocal()
