"""Layered permutations and their composition encoding.

A layered permutation is a concatenation of decreasing blocks whose values
rise block over block: ``[2, 1]`` encodes 2,1,3 and ``[1, 4]`` encodes
1,5,4,3,2.  A composition (tuple of positive parts) is therefore a perfect
stand-in for a layered permutation, and equally for a tiling of a 1 x n
strip.  Working at the composition level keeps sweeps at 2^(n-1) objects
instead of scanning involutions with full pattern counts.

Text format used by the CLI and golden files: comma-separated parts in
square brackets, e.g. ``[1,4]``; the empty composition is ``[]``.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .perms import check_permutation

Composition = tuple[int, ...]


def check_composition(parts: Sequence[int]) -> Composition:
    """Return parts as a tuple, raising ValueError on nonpositive parts."""
    c = tuple(parts)
    if any(p < 1 for p in c):
        raise ValueError(f"composition parts must be positive: {c!r}")
    return c


def parse_composition(text: str) -> Composition:
    """Parse the bracketed text form, e.g. '[1,4]' or '[]'.

    >>> parse_composition("[1,4]"), parse_composition("[]")
    ((1, 4), ())
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"composition must look like [1,4]: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"composition parts must be integers: {text!r}") from None
    return check_composition(parts)


def format_composition(parts: Sequence[int]) -> str:
    """Inverse of parse_composition.

    >>> format_composition((1, 4))
    '[1,4]'
    """
    return "[" + ",".join(str(p) for p in parts) + "]"


def build_layered(parts: Sequence[int]) -> tuple[int, ...]:
    """The layered permutation with the given block lengths.

    Always an involution that avoids 231.

    >>> build_layered((2, 1))
    (2, 1, 3)
    >>> build_layered((1, 4))
    (1, 5, 4, 3, 2)
    """
    c = check_composition(parts)
    out: list[int] = []
    top = 0
    for length in c:
        top += length
        out.extend(range(top, top - length, -1))
    return tuple(out)


def decompose_layered(p: Sequence[int]) -> Composition | None:
    """The unique composition c with build_layered(c) == p, or None if p is
    not layered.  None is a normal answer, not an error.

    >>> decompose_layered((2, 1, 3))
    (2, 1)
    >>> decompose_layered((2, 3, 1)) is None
    True
    """
    perm = check_permutation(p)
    parts: list[int] = []
    i = 0
    n = len(perm)
    while i < n:
        length = perm[i] - i
        if length < 1:
            return None
        if any(perm[i + j] != perm[i] - j for j in range(length)):
            return None
        parts.append(length)
        i += length
    return tuple(parts)


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of n in lexicographic order (2^(n-1) of them,
    one empty composition for n = 0).

    >>> list(enumerate_compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError("total must be nonnegative")
    prefix: list[int] = []

    def rec(remaining: int) -> Iterator[Composition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(1, remaining + 1):
            prefix.append(part)
            yield from rec(remaining - part)
            prefix.pop()

    return rec(n)


# The layered permutations of length n are exactly the 231-avoiding
# involutions of length n, so enumerating them is enumerating compositions.
enumerate_layered = enumerate_compositions


def count_pattern_in_layered(host: Sequence[int], pat: Sequence[int]) -> int:
    """Occurrences of the layered permutation of `pat` inside the layered
    permutation of `host`, computed block-wise.

    Each pattern block must embed inside a single host block, and distinct
    pattern blocks land in strictly later host blocks, so the count is a
    sum over increasing block choices of products of binomials.  A dynamic
    program over (host block, pattern block) evaluates it in polynomial
    time.  The empty pattern occurs exactly once.

    >>> count_pattern_in_layered((3,), (2,))
    3
    >>> count_pattern_in_layered((2, 2, 1), (2, 2))
    1
    """
    h = check_composition(host)
    t = check_composition(pat)
    m = len(t)
    # ways[j] = matchings of the first j pattern blocks into the host
    # blocks processed so far.
    ways = [0] * (m + 1)
    ways[0] = 1
    for block in h:
        for j in range(m, 0, -1):
            if block >= t[j - 1]:
                ways[j] += ways[j - 1] * comb(block, t[j - 1])
    return ways[m]


def layered_contains(host: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff the layered permutation of `host` contains the one of `pat`.

    Containment only needs each chosen host block to be at least as long
    as its pattern block, so a greedy left-to-right scan suffices.
    """
    t = check_composition(pat)
    if not t:
        return True
    j = 0
    for block in host:
        if block >= t[j]:
            j += 1
            if j == len(t):
                return True
    return False


def gap_caps(pat: Sequence[int]) -> tuple[int, ...]:
    """Largest block length allowed in each of the m+1 gaps around the m
    blocks of a forbidden-once layered pattern.

    The gap before the first block caps at l_1 - 1, after the last at
    l_m - 1, and between blocks i and i+1 at min(l_i, l_{i+1}) - 1; a
    cap of 0 forces that gap to stay empty.

    >>> gap_caps((1, 4))
    (0, 0, 3)
    """
    c = check_composition(pat)
    if not c:
        raise ValueError("gap caps need a nonempty pattern")
    caps = [c[0] - 1]
    for left, right in zip(c, c[1:]):
        caps.append(min(left, right) - 1)
    caps.append(c[-1] - 1)
    return tuple(caps)
