"""Closed forms and generating functions against frozen oracle values.

Every literal expected value here was computed with the brute-force
oracles in `perms` (see test_acceptance.py for the sweeps that recompute
them live at full range).
"""

import pytest

from inv231.enumeration import (
    build_dec_inc_dec,
    choose,
    count_avoid_132_213_dec_inc_dec,
    count_avoid231_avoid_layered,
    count_avoid231_contain_k21,
    count_avoid231_once_layered,
    count_avoid231_once_ones_block,
    count_one231,
    count_one231_avoid_k21,
    count_one231_contain_k21,
    gf_avoid231_avoid_layered,
    gf_avoid231_contain_k21,
    gf_avoid231_contain_k21_xy,
    gf_avoid231_once_layered,
    gf_fib_k,
    gf_one231_avoid_k21,
    gf_one231_avoid_layered,
    gf_one231_contain_k21,
    gf_one231_contain_k21_xy,
    gf_one231_once_layered,
    weak_compositions,
)
from inv231.fibonacci import fib_k
from inv231.layered import count_pattern_in_layered, enumerate_compositions


def test_choose_conventions():
    assert choose(5, 2) == 10
    assert choose(3, 5) == 0
    assert choose(-1, 0) == 1
    assert choose(0, 0) == 1
    assert choose(-2, 3) == 0
    assert choose(4, -1) == 0


def test_weak_compositions():
    assert sorted(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
    assert list(weak_compositions(-1, 2)) == []
    assert list(weak_compositions(0, 0)) == [()]
    assert len(list(weak_compositions(5, 3))) == choose(7, 2)


def test_build_dec_inc_dec():
    assert build_dec_inc_dec(1, 1, 1) == (3, 2, 1)
    assert build_dec_inc_dec(1, 2, 1) == (4, 2, 3, 1)
    assert build_dec_inc_dec(2, 1, 1) == (4, 3, 2, 1)
    assert build_dec_inc_dec(2, 2, 2) == (6, 5, 3, 4, 2, 1)
    with pytest.raises(ValueError):
        build_dec_inc_dec(0, 1, 1)


def test_count_avoid_132_213_dec_inc_dec():
    # Oracle: S_3(132,213,321) = {123, 231, 312}.
    assert count_avoid_132_213_dec_inc_dec(3, 1, 1, 1) == 3
    # With the middle run of size 2 the tail collapses: 1 + n(n-1)/2.
    for n in range(2, 8):
        assert count_avoid_132_213_dec_inc_dec(n, 1, 2, 1) == 1 + n * (n - 1) // 2
    # Length zero: only the empty permutation, for any pattern sizes.
    for abc in ((1, 1, 1), (2, 1, 2), (1, 3, 1)):
        assert count_avoid_132_213_dec_inc_dec(0, *abc) == 1


def test_avoid231_contain_k21_values():
    # Compositions of 5 with exactly one part 2: 4 of them.
    assert count_avoid231_contain_k21(5, 2, 1) == 4
    # Compositions of 4 with parts <= 2: 5 of them.
    assert count_avoid231_contain_k21(4, 3, 0) == 5
    for k in (1, 2, 3, 4):
        for r in range(0, k + 1):
            assert count_avoid231_contain_k21(k * r, k, r) == 1
    assert count_avoid231_contain_k21(3, 2, 2) == 0


def test_avoid231_contain_k21_preconditions():
    with pytest.raises(ValueError):
        count_avoid231_contain_k21(5, 2, 3)
    with pytest.raises(ValueError):
        gf_avoid231_contain_k21(2, 3)
    with pytest.raises(ValueError):
        count_avoid231_contain_k21(5, 0, 0)


def test_avoid231_contain_k21_duality():
    for k in (2, 3, 5):
        for r in range(0, min(k, 3) + 1):
            gf = gf_avoid231_contain_k21(k, r, 16)
            for n in range(17):
                assert gf.coeff(n) == count_avoid231_contain_k21(n, k, r)


def test_avoid231_contain_k21_bivariate():
    xy = gf_avoid231_contain_k21_xy(2, 8)
    assert all(xy.coeff(n, 0) == 1 for n in range(9))
    assert xy.coeff(5, 1) == 4
    xy4 = gf_avoid231_contain_k21_xy(4, 6)
    assert xy4.coeff(3, 0) == 4
    assert all(xy4.coeff(3, r) == 0 for r in range(1, 6))


def test_avoid231_once_layered_values():
    # Hosts {2,2,1},{2,1,2},{1,2,2} rearranged: 3 compositions of 5 with the
    # two 2-blocks pinned.
    assert count_avoid231_once_layered(5, (2, 2)) == 3
    assert gf_avoid231_once_layered((2, 2), 8).coeff(5) == 3
    # Whole pattern [1,4] at n=9 is a single Fibonacci number.
    assert count_avoid231_once_layered(9, (1, 4)) == 7 == fib_k(3, 5)
    # A single block is the k..21 case at r=1.
    for l in (2, 3, 4):
        for n in range(0, 12):
            assert count_avoid231_once_layered(n, (l,)) == \
                count_avoid231_contain_k21(n, l, 1)


def test_avoid231_once_ones_block():
    assert count_avoid231_once_ones_block(8, 1, 4) == 4 == fib_k(3, 4)
    for k in (1, 2, 3):
        for l in (1, 2, 4):
            assert count_avoid231_once_ones_block(k + l, k, l) == 1
            assert count_avoid231_once_ones_block(k + l - 1, k, l) == 0
    with pytest.raises(ValueError):
        count_avoid231_once_ones_block(5, 0, 2)


def test_avoid_both_matches_composition_sweep():
    for pat in ((4,), (1, 4), (4, 1), (2, 1, 2)):
        gf = gf_avoid231_avoid_layered(pat, 11)
        for n in range(0, 12):
            brute = sum(1 for c in enumerate_compositions(n)
                        if count_pattern_in_layered(c, pat) == 0)
            assert gf.coeff(n) == brute == count_avoid231_avoid_layered(n, pat)


def test_avoid_both_known_sequences():
    # Avoiding a single block of 4 leaves compositions with parts <= 3.
    assert [count_avoid231_avoid_layered(n, (4,)) for n in range(8)] == \
        [1, 1, 2, 4, 7, 13, 24, 44]
    # The empty pattern occurs in everything.
    assert [count_avoid231_avoid_layered(n, ()) for n in range(4)] == [0] * 4


def test_count_one231():
    assert [count_one231(n) for n in range(9)] == [0, 0, 0, 0, 1, 2, 5, 12, 28]
    assert count_one231(12) == 11 * 2 ** 6


def test_one231_avoid_k21():
    assert count_one231_avoid_k21(4, 4) == 1
    assert count_one231_avoid_k21(5, 4) == 2
    assert count_one231_avoid_k21(6, 4) == 5
    # Below k=4 nothing can both contain one 231 and dodge the forced 4231.
    with pytest.raises(ValueError):
        count_one231_avoid_k21(6, 3)
    with pytest.raises(ValueError):
        gf_one231_avoid_k21(2)
    gf = gf_one231_avoid_k21(4, 12)
    for n in range(13):
        assert gf.coeff(n) == count_one231_avoid_k21(n, 4)


def test_one231_avoid_layered_recursion():
    # Single blocks reproduce the closed form exactly.
    for l in (4, 5):
        assert gf_one231_avoid_layered((l,), 20).coeffs == \
            gf_one231_avoid_k21(l, 20).coeffs
    # Tiny patterns kill everything: one 231 forces 4231, hence 321 etc.
    for pat in ((1,), (2,), (3,)):
        assert not any(gf_one231_avoid_layered(pat, 12).coeffs)
    # Oracle-frozen small values.
    g14 = gf_one231_avoid_layered((1, 4), 8)
    assert g14.coeff(4) == 1 and g14.coeff(5) == 2
    g41 = gf_one231_avoid_layered((4, 1), 8)
    assert g41.coeff(4) == 1 and g41.coeff(5) == 2
    assert gf_one231_avoid_layered((), 8) == gf_one231_avoid_layered((), 8)
    assert not any(gf_one231_avoid_layered((), 8).coeffs)


def test_one231_contain_k21():
    assert count_one231_contain_k21(8, 4, 1) == 2
    for k in (4, 5):
        for r in (0, 1, 2):
            assert count_one231_contain_k21(k * r + 4, k, r) == r + 1
    assert count_one231_contain_k21(6, 4, 0) == 5 == count_one231_avoid_k21(6, 4)
    gf = gf_one231_contain_k21(4, 1, 14)
    for n in range(15):
        assert gf.coeff(n) == count_one231_contain_k21(n, 4, 1)
    with pytest.raises(ValueError):
        count_one231_contain_k21(8, 3, 1)
    with pytest.raises(ValueError):
        gf_one231_contain_k21(4, 5)


def test_one231_contain_k21_bivariate():
    xy = gf_one231_contain_k21_xy(4, 9)
    assert xy.coeff(4, 0) == 1
    assert xy.coeff(5, 0) == 2
    assert xy.coeff(8, 1) == 2
    with pytest.raises(ValueError):
        gf_one231_contain_k21_xy(3)


def test_one231_once_layered_seeds():
    for l in (4, 5, 6):
        assert gf_one231_once_layered((l,), 20).coeffs == \
            gf_one231_contain_k21(l, 1, 20).coeffs
    assert not any(gf_one231_once_layered((2,), 12).coeffs)
    assert gf_one231_once_layered((4,), 10).coeff(8) == 2
    with pytest.raises(ValueError):
        gf_one231_once_layered((), 10)


def test_one231_once_layered_recursion_values():
    # What the peel-the-last-block recursion computes.  For [1,4] these
    # match the brute-force oracle (1, 2, 5 at n = 9, 10, 11); for [4,1]
    # they are the recursion's own output, which overcounts relative to
    # enumeration (see the acceptance suite for the live comparison).
    g14 = gf_one231_once_layered((1, 4), 12)
    assert [g14.coeff(n) for n in (8, 9, 10, 11)] == [0, 1, 2, 5]
    g41 = gf_one231_once_layered((4, 1), 12)
    assert [g41.coeff(n) for n in (8, 9, 10, 11)] == [0, 2, 6, 18]


def test_y1_specializations():
    u = gf_avoid231_contain_k21_xy(3, 10).eval_y_one()
    assert u.coeff(0) == 1
    for n in range(1, 11):
        assert u.coeff(n) == 2 ** (n - 1)
    v = gf_one231_contain_k21_xy(5, 10).eval_y_one()
    for n in range(11):
        assert v.coeff(n) == count_one231(n)


def test_gf_fib_k():
    gf = gf_fib_k(2, 10)
    assert [gf.coeff(n) for n in range(11)] == [fib_k(2, n) for n in range(11)]
    with pytest.raises(ValueError):
        gf_fib_k(0)
