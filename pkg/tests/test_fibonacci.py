import pytest

from inv231.fibonacci import count_bounded_tilings, fib_k


def test_order_two_is_ordinary_fibonacci():
    assert [fib_k(2, n) for n in range(7)] == [0, 1, 1, 2, 3, 5, 8]


def test_order_zero():
    assert fib_k(0, 1) == 1
    assert fib_k(0, 5) == 0
    assert fib_k(0, 0) == 0


def test_small_values():
    # Order 3 unrolls as 1, 1, 2, 4, 7.
    assert fib_k(3, 5) == 7
    assert fib_k(7, -3) == 0
    assert fib_k(1, 9) == 1


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        fib_k(-1, 3)


def test_tilings_examples():
    assert count_bounded_tilings(0, 5) == 1
    # {1+1+1, 1+2, 2+1}
    assert count_bounded_tilings(3, 2) == 3
    assert count_bounded_tilings(5, 3) == 13


def test_tilings_validation():
    with pytest.raises(ValueError):
        count_bounded_tilings(-1, 2)
    with pytest.raises(ValueError):
        count_bounded_tilings(3, 0)


def test_tilings_match_fib():
    for k in range(1, 5):
        for n in range(0, 11):
            assert count_bounded_tilings(n, k) == fib_k(k, n + 1)


def test_unbounded_parts_give_powers_of_two():
    for n in range(1, 12):
        assert fib_k(n, n + 1) == 2 ** (n - 1)
        assert fib_k(n + 5, n + 1) == 2 ** (n - 1)


def test_monotone_in_order():
    for k in range(0, 6):
        for n in range(1, 20):
            assert fib_k(k, n) <= fib_k(k + 1, n)
