"""Flat encoder fixtures and laws."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isokit.errors import LawViolation, NegativeElement, NotDyadic
from isokit.flat import (FunBits, bits, bits2nat, bsucc, dyadic, dyadic2set,
                         fun, funbits, funbits2nat, fun2mset, fun2set,
                         fun2string, mset, mset2fun, nat, nat2bits,
                         nat2funbits, nat2pmset, nat2set, nat2z, pmset,
                         pmset2nat, set_, set2dyadic, set2fun, set2nat,
                         string, z, z2nat)
from isokit.iso import convert

nats = st.integers(min_value=0, max_value=1 << 60)


def test_fun_identity():
    assert fun.encode([3, 0, 1]) == [3, 0, 1]
    assert convert(fun, nat, 2008) == [3, 0, 1, 0, 0, 0, 0]
    assert convert(nat, fun, [3, 0, 1, 0, 0, 0, 0]) == 2008
    with pytest.raises(NegativeElement):
        fun.encode([1, -2])


def test_mset_fixtures():
    assert mset2fun([1, 3, 3, 3, 4, 4]) == [1, 2, 0, 0, 1, 0]
    assert fun2mset([1, 2, 0, 0, 1, 0]) == [1, 3, 3, 3, 4, 4]
    assert mset2fun([]) == []
    assert mset2fun([4, 4, 1, 3, 3, 3]) == [1, 2, 0, 0, 1, 0]  # sorts first


def test_set_fixtures():
    assert set2fun([0, 2, 3, 4, 9]) == [0, 1, 0, 0, 4]
    assert fun2set([0, 1, 0, 0, 4]) == [0, 2, 3, 4, 9]
    assert set2fun([7, 1, 4, 3]) == [1, 1, 0, 2]
    with pytest.raises(LawViolation):
        set2fun([1, 1, 2])


def test_nat_fixtures():
    assert nat2set(2008) == [3, 4, 6, 7, 8, 9, 10]
    assert nat2set(0) == []
    assert set2nat([1, 3, 5]) == 42
    assert set2nat([5, 1, 3]) == 42  # distinct but unordered is lawful
    with pytest.raises(LawViolation):
        set2nat([1, 1])
    assert convert(set_, nat, 42) == [1, 3, 5]


def test_set_fun_cascade():
    xs = [0, 1, 2, 3]
    xs = convert(set_, fun, xs)
    assert xs == [0, 2, 5, 9]
    xs = convert(set_, fun, xs)
    assert xs == [0, 3, 9, 19]
    xs = convert(set_, fun, xs)
    assert xs == [0, 4, 14, 34]


def test_pmset_fixtures():
    assert nat2pmset(2008) == [3, 3, 12]
    assert [nat2pmset(n) for n in range(8)] == [
        [], [0], [1], [0, 0], [2], [0, 1], [3], [0, 0, 0]]
    assert pmset2nat([]) == 0
    assert pmset2nat([3, 3, 12]) == 2008
    assert convert(nat, pmset, nat2pmset(4095)) == 4095


def test_bits_fixtures():
    assert nat2bits(42) == [1, 1, 0, 1, 0]
    assert nat2bits(0) == []
    assert bits2nat([1, 1, 0, 1, 0]) == 42
    with pytest.raises(LawViolation):
        bits2nat([0, 2])


def test_bits_fun_cascade():
    xs = [1, 1]
    xs = convert(bits, fun, xs)
    assert xs == [1, 1, 0]
    xs = convert(bits, fun, xs)
    assert xs == [1, 1, 0, 1]
    xs = convert(bits, fun, xs)
    assert xs == [1, 1, 0, 1, 1, 0]


def test_funbits_fixtures():
    chain = FunBits((1, 0, 0, 1, 1, 0, 1, 1, 1, 1))  # I O O I I O I I I I E
    assert funbits2nat(chain) == 2008
    assert nat2funbits(2008) == chain
    assert funbits2nat(bsucc(chain)) == 2009
    assert nat2funbits(0) == FunBits(())
    for n in range(500):
        assert funbits2nat(bsucc(nat2funbits(n))) == n + 1


def test_z_fixtures():
    assert convert(set_, z, -42) == [0, 1, 4, 6]
    assert convert(z, set_, [0, 1, 4, 6]) == -42
    assert z2nat(0) == 0
    assert nat2z(5) == -3  # (-5-1)/2
    for v in range(-300, 300):
        assert nat2z(z2nat(v)) == v


def test_string_fixtures():
    assert convert(set_, string, "hello") == [104, 206, 315, 424, 536]
    assert convert(string, set_, [104, 206, 315, 424, 536]) == "hello"
    assert string.encode("") == []
    assert fun2string([104]) == "h"
    with pytest.raises(LawViolation):
        fun2string([0x110000])
    with pytest.raises(LawViolation):
        fun2string([0xD800])


def test_dyadic_fixtures():
    assert set2dyadic([]) == 0
    assert set2dyadic([0]) == Fraction(1, 2)
    assert convert(dyadic, nat, 42) == Fraction(21, 64)
    assert dyadic2set(Fraction(21, 64)) == [1, 3, 5]
    with pytest.raises(NotDyadic):
        dyadic2set(Fraction(1, 3))
    with pytest.raises(NotDyadic):
        dyadic2set(Fraction(3, 2))


def test_dyadic_injective_on_prefix():
    seen = {}
    for n in range(256):
        q = convert(dyadic, nat, n)
        assert 0 <= q < 1
        assert q not in seen
        seen[q] = n


@given(nats)
def test_flat_roundtrips(n):
    for enc in (fun, mset, set_, nat, bits, funbits, z, string, dyadic):
        assert nat.decode(enc.encode(enc.decode(nat.encode(n)))) == n
