"""Red/blue tilings and their bijection with one-231 involutions."""

import pytest

from inv231.bijection import (
    RED_BLOCK,
    check_tiling,
    enumerate_redblue,
    format_tiling,
    involution_to_tiling,
    parse_tiling,
    tiling_to_involution,
)
from inv231.enumeration import choose, count_one231
from inv231.perms import count_occurrences, involutions_with_one_231, is_involution


def test_forward_examples():
    assert tiling_to_involution((("R", 4), ("B", 1))) == (4, 2, 3, 1, 5)
    assert tiling_to_involution((("B", 1), ("R", 4))) == (1, 5, 3, 4, 2)
    assert tiling_to_involution((("R", 4),)) == (4, 2, 3, 1)


def test_inverse_examples():
    assert involution_to_tiling((4, 2, 3, 1, 5)) == (("R", 4), ("B", 1))
    assert involution_to_tiling((1, 5, 3, 4, 2)) == (("B", 1), ("R", 4))
    assert involution_to_tiling((4, 2, 3, 1)) == (("R", 4),)


def test_inverse_validates_preconditions():
    with pytest.raises(ValueError, match="not an involution"):
        involution_to_tiling((2, 3, 1))
    with pytest.raises(ValueError, match="none"):
        involution_to_tiling((1, 2, 3, 4))
    # 3412 is an involution with two 231 occurrences.
    assert is_involution((3, 4, 1, 2))
    assert count_occurrences((3, 4, 1, 2), (2, 3, 1)) == 2
    with pytest.raises(ValueError, match="several"):
        involution_to_tiling((3, 4, 1, 2))
    with pytest.raises(ValueError):
        involution_to_tiling((1, 1))


def test_check_tiling():
    with pytest.raises(ValueError):
        check_tiling((("B", 2),))
    with pytest.raises(ValueError):
        check_tiling((("R", 4), ("R", 4)))
    with pytest.raises(ValueError):
        check_tiling((("R", 3),))
    with pytest.raises(ValueError):
        check_tiling((("B", 0), ("R", 4)))
    with pytest.raises(ValueError):
        check_tiling((("G", 2), ("R", 4)))


def test_text_format():
    tiling = (("B", 1), ("R", 4), ("B", 2))
    assert format_tiling(tiling) == "B1 R4 B2"
    assert parse_tiling("B1 R4 B2") == tiling
    assert parse_tiling("B12 R4") == (("B", 12), ("R", 4))
    with pytest.raises(ValueError):
        parse_tiling("B1 Q4")
    with pytest.raises(ValueError):
        parse_tiling("B1 B2")


def test_enumerate_redblue_counts():
    assert sum(1 for _ in enumerate_redblue(4)) == 1
    assert sum(1 for _ in enumerate_redblue(5)) == 2
    assert sum(1 for _ in enumerate_redblue(7)) == 12
    assert list(enumerate_redblue(3)) == []
    assert list(enumerate_redblue(0)) == []
    for n in range(4, 11):
        assert sum(1 for _ in enumerate_redblue(n)) == count_one231(n)


def test_enumerate_redblue_order():
    listing = [format_tiling(t) for t in enumerate_redblue(6)]
    assert listing == ["R4 B1 B1", "R4 B2", "B1 R4 B1", "B1 B1 R4", "B2 R4"]


def test_roundtrip_and_image_set():
    for n in range(0, 10):
        tilings = list(enumerate_redblue(n))
        images = [tiling_to_involution(t) for t in tilings]
        assert len(set(images)) == len(images)
        for tiling, image in zip(tilings, images):
            assert is_involution(image)
            assert count_occurrences(image, (2, 3, 1)) == 1
            assert involution_to_tiling(image) == tiling
        assert set(images) == set(involutions_with_one_231(n))


def test_pattern_transport():
    # Decreasing patterns live inside single tiles, so counts add up from
    # per-tile binomials plus the red block's own content.
    for k in (3, 4, 5):
        pat = tuple(range(k, 0, -1))
        red_part = count_occurrences(RED_BLOCK, pat)
        for n in range(4, 10):
            for tiling in enumerate_redblue(n):
                structural = red_part + sum(choose(length, k)
                                            for color, length in tiling
                                            if color == "B")
                assert structural == count_occurrences(
                    tiling_to_involution(tiling), pat)
