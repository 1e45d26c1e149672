"""Multiset arithmetic analogies and the comparison-free sorts."""
import itertools

import pytest

from isokit.errors import LawViolation, NotDivisible
from isokit.msetarith import (mdiv, mexp, mexp1, mgcd, mlcm, mprod, mprod1,
                              pmprod, pmprod_closed, strange_sort,
                              strange_sort_multi)


def test_mprod_fixtures():
    assert mprod(41, mprod(33, 88)) == 3539
    assert mprod(mprod(41, 33), 88) == 3539
    assert mprod(33, 46) == 605 == mprod(46, 33)
    assert mprod(0, 712) == 712
    assert mprod(5513, 0) == 5513


def test_mexp_squares_table():
    assert [mexp(x, 2) for x in range(16)] == [
        0, 3, 6, 15, 12, 27, 30, 63, 24, 51, 54, 111, 60, 123, 126, 255]


def test_mexp1_squares_table():
    assert [mexp1(x, 2) for x in range(17)] == [
        0, 1, 4, 7, 16, 13, 28, 31, 64, 25, 52, 55, 112, 61, 124, 127, 256]


def test_mprod1_identity_and_power_of_two():
    for x in range(65):
        assert mprod1(x, 1) == x == mprod1(1, x)
    for k in range(6):
        for y in range(21):
            assert mprod1(1 << k, y) == (1 << k) * y


def test_mprod1_dominated_by_product():
    for x in range(1, 129):
        for y in range(1, 129):
            v = mprod1(x, y)
            assert v <= x * y
            power_of_two = (x & (x - 1) == 0) or (y & (y - 1) == 0)
            assert (v == x * y) == power_of_two


def test_mexp1_square_vs_square():
    for x in range(65):
        v = mexp1(x, 2)
        assert v <= x * x
        assert (v == x * x) == (x == 0 or x & (x - 1) == 0)


def test_monoid_laws():
    rng = range(31)
    for a, b in itertools.product(rng, rng):
        assert mprod(a, b) == mprod(b, a)
        assert mprod1(a, b) == mprod1(b, a)
        assert pmprod(a, b) == pmprod(b, a)
    for a in rng:
        assert mprod(a, 0) == a
        assert mprod1(a, 1) == a
        assert pmprod(a, 0) == a
    triples = [(0, 1, 2), (3, 5, 7), (4, 9, 25), (12, 30, 2), (6, 6, 6), (17, 2, 8)]
    for a, b, c in triples:
        assert mprod(a, mprod(b, c)) == mprod(mprod(a, b), c)
        assert mprod1(a, mprod1(b, c)) == mprod1(mprod1(a, b), c)
        assert pmprod(a, pmprod(b, c)) == pmprod(pmprod(a, b), c)


def test_pmprod_closed_form():
    for n in range(41):
        for m in range(41):
            assert pmprod(n, m) == pmprod_closed(n, m) == (n + 1) * (m + 1) - 1
    assert pmprod_closed(0, 17) == 17
    assert pmprod(1, 1) == 3


def test_gcd_lcm_div_laws():
    for x in range(65):
        assert mgcd(x, x) == x
    pairs = [(42, 2008), (2008, 42), (12, 18), (1, 99), (0, 5), (7, 7)]
    for x, y in pairs:
        assert mprod(mgcd(x, y), mlcm(x, y)) == mprod(x, y)
        assert mdiv(mprod(x, y), y) == x
        assert mdiv(mprod(x, y), x) == y
    with pytest.raises(NotDivisible):
        mdiv(1, 2008)


def test_strange_sort():
    assert strange_sort([2, 9, 3, 1, 5, 0, 7, 4, 8, 6]) == list(range(10))
    assert strange_sort([]) == []
    with pytest.raises(LawViolation):
        strange_sort([1, 1])
    assert strange_sort_multi([2, 4, 1, 1, 0, 3, 17, 1, 4]) == [0, 1, 1, 1, 2, 3, 4, 4, 17]
    assert strange_sort_multi([]) == []
