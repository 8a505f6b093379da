"""The constructive bijection between involutions containing exactly one
231 and red/blue tilings of a strip.

A tiling is an ordered sequence of tiles covering squares 1..n: blue tiles
of any positive length and exactly one red tile of length 4.  Reading each
blue tile as its squares in reverse order and the red tile on squares
a..a+3 as a+3, a+1, a+2, a produces an involution with exactly one 231
occurrence; every such involution arises from exactly one tiling.

Text format, left to right and space-separated: ``B1 R4 B2``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .layered import enumerate_compositions
from .perms import PATTERN_231, _count_occurrences, check_permutation, is_involution

BLUE = "B"
RED = "R"

Tile = tuple[str, int]
Tiling = tuple[Tile, ...]

#: Relative order of the four red-tile entries.
RED_BLOCK = (4, 2, 3, 1)


def check_tiling(tiles: Sequence[Tile]) -> Tiling:
    """Return the tiling as a tuple, raising ValueError unless it has
    positive tile lengths and exactly one red tile of length 4."""
    t = tuple((color, int(length)) for color, length in tiles)
    reds = 0
    for color, length in t:
        if color == RED:
            reds += 1
            if length != 4:
                raise ValueError(f"red tiles have length 4, got {length}")
        elif color == BLUE:
            if length < 1:
                raise ValueError(f"blue tile lengths must be positive: {length}")
        else:
            raise ValueError(f"unknown tile color {color!r}")
    if reds != 1:
        raise ValueError(f"need exactly one red tile, got {reds}")
    return t


def tiling_total(tiles: Sequence[Tile]) -> int:
    """Number of squares the tiling covers."""
    return sum(length for _, length in tiles)


def format_tiling(tiles: Sequence[Tile]) -> str:
    """Render e.g. (('B', 1), ('R', 4)) as 'B1 R4'."""
    return " ".join(f"{color}{length}" for color, length in tiles)


def parse_tiling(text: str) -> Tiling:
    """Inverse of format_tiling."""
    tiles = []
    for token in text.split():
        color, digits = token[0], token[1:]
        if color not in (BLUE, RED) or not digits.isdigit():
            raise ValueError(f"bad tile token {token!r}")
        tiles.append((color, int(digits)))
    return check_tiling(tiles)


def tiling_to_involution(tiles: Sequence[Tile]) -> tuple[int, ...]:
    """The involution the tiling encodes.

    >>> tiling_to_involution((("R", 4), ("B", 1)))
    (4, 2, 3, 1, 5)
    >>> tiling_to_involution((("B", 1), ("R", 4)))
    (1, 5, 3, 4, 2)
    """
    t = check_tiling(tiles)
    out: list[int] = []
    offset = 0
    for color, length in t:
        a = offset + 1
        if color == RED:
            out.extend((a + 3, a + 1, a + 2, a))
        else:
            out.extend(range(offset + length, offset, -1))
        offset += length
    result = tuple(out)
    assert is_involution(result), result
    assert _count_occurrences(result, PATTERN_231, cap=1) == 1, result
    return result


def involution_to_tiling(p: Sequence[int]) -> Tiling:
    """The unique tiling mapping to p under tiling_to_involution.

    The preconditions are checked eagerly: p must be an involution and
    must contain exactly one 231.  The tiling falls out of splitting p at
    every point where the values seen so far are exactly 1..i (each such
    minimal segment is one tile) and reading each segment's shape.

    >>> involution_to_tiling((4, 2, 3, 1, 5))
    (('R', 4), ('B', 1))
    """
    perm = check_permutation(p)
    if not is_involution(perm):
        raise ValueError(f"not an involution: {perm!r}")
    occ = _count_occurrences(perm, PATTERN_231, cap=1)
    if occ != 1:
        raise ValueError(
            f"need exactly one 231 occurrence, found {'none' if occ == 0 else 'several'}")
    tiles: list[Tile] = []
    start = 0
    high = 0
    for i, v in enumerate(perm):
        high = max(high, v)
        if high != i + 1:
            continue
        length = i + 1 - start
        block = perm[start: i + 1]
        if all(block[j] == block[0] - j for j in range(length)):
            tiles.append((BLUE, length))
        elif length == 4 and tuple(v - start for v in block) == RED_BLOCK:
            tiles.append((RED, 4))
        else:
            raise ValueError(
                f"segment {block!r} is neither a reversed run nor a red block")
        start = i + 1
    return check_tiling(tiles)


def enumerate_redblue(n: int) -> Iterator[Tiling]:
    """All tilings of total length n with exactly one red tile, ordered by
    total blue length before the red tile, then lexicographically by the
    blue tile lengths on each side.  Empty for n < 4 (no red tile fits).

    >>> [format_tiling(t) for t in enumerate_redblue(5)]
    ['R4 B1', 'B1 R4']
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    for before in range(0, n - 3):
        after = n - 4 - before
        for left in enumerate_compositions(before):
            left_tiles = tuple((BLUE, length) for length in left)
            for right in enumerate_compositions(after):
                yield left_tiles + ((RED, 4),) + tuple(
                    (BLUE, length) for length in right)
