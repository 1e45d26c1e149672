"""Groupoid structure and transport combinators."""
import pytest

from isokit.errors import LawViolation, UnknownEncoder
from isokit.flat import bits, mset, nat, nat_set, set_
from isokit.iso import (Iso, borrow, borrow2, borrow_from, borrow_from_steps,
                        compose, convert, fit, invert, itself, lend, retrofit,
                        route)
from isokit.registry import lookup

SAMPLES = [0, 1, 2, 5, 42, 255, 2008, 123456]


def test_compose_identity_element():
    e = nat.iso
    f = compose(itself, e)
    g = compose(e, itself)
    for n in SAMPLES:
        assert f.fwd(n) == e.fwd(n)
        assert g.fwd(n) == e.fwd(n)


def test_compose_with_inverse_is_identity():
    e = nat.iso
    round_ = compose(e, invert(e))
    for n in SAMPLES:
        assert round_.fwd(n) == n


def test_compose_nat_set_with_set_is_nat():
    rebuilt = compose(nat_set, set_.iso)
    assert rebuilt.fwd(2008) == [3, 0, 1, 0, 0, 0, 0]
    assert nat.encode(2008) == [3, 0, 1, 0, 0, 0, 0]


def test_compose_associative_pointwise():
    a, b, c = nat_set, set_.iso, invert(mset.iso)
    left = compose(compose(a, b), c)
    right = compose(a, compose(b, c))
    for n in SAMPLES:
        assert left.fwd(n) == right.fwd(n)
        assert left.bwd(left.fwd(n)) == n


def test_invert_is_involution():
    for n in SAMPLES:
        assert invert(invert(nat.iso)).fwd(n) == nat.iso.fwd(n)
    assert invert(nat.iso).fwd([3, 0, 1, 0, 0, 0, 0]) == 2008
    assert invert(itself).fwd(7) == 7


def test_convert_fixtures():
    assert convert(set_, nat, 2008) == [3, 4, 6, 7, 8, 9, 10]
    assert convert(mset, set_, [0, 2, 3, 4, 9]) == [0, 1, 1, 1, 5]
    for x in ([1, 2], [0, 5, 9]):
        assert convert(set_, set_, x) == x


def test_convert_law_violation():
    with pytest.raises(LawViolation):
        convert(nat, set_, [1, 1, 2])


def test_transport_unary():
    assert lend(nat.iso, lambda xs: list(reversed(xs)), 2008) == 1135
    assert borrow(nat_set, lambda n: n + 1, [1, 2, 3]) == [0, 1, 2, 3]
    assert borrow(nat_set, lambda n: n, [1, 2, 3]) == [1, 2, 3]


def test_transport_binary_fixtures():
    union = lambda a, b: sorted(set(a) | set(b))
    inter = lambda a, b: sorted(set(a) & set(b))
    assert borrow_from(set_, union, nat, 42, 2008) == 2042
    assert borrow_from(set_, inter, nat, 42, 2008) == 8
    assert borrow_from(nat, lambda a, b: a + b, set_, [1, 2, 3], [3, 4, 5]) == [1, 2, 6]


def test_transport_binary_equals_explicit_steps():
    ops = [
        (set_, lambda a, b: sorted(set(a) | set(b)), nat),
        (nat, lambda a, b: a + b, set_),
        (nat, lambda a, b: a * b, bits),
    ]
    pairs = [(x, y) for x in range(20) for y in range(20)]
    for other, op, this in ops:
        for x, y in pairs:
            tx = convert(this, nat, x)
            ty = convert(this, nat, y)
            assert (borrow_from(other, op, this, tx, ty)
                    == borrow_from_steps(other, op, this, tx, ty))


def test_borrow2_bits_product():
    # multiplication borrowed into bijective binary
    assert borrow2(route(nat, bits), lambda a, b: a * b,
                   [1, 1, 0], [1, 0, 1, 1]) == [1, 0, 0, 1, 1, 0, 0, 0]


def test_fit_retrofit():
    assert fit(len, nat.iso, 42) == 3
    assert retrofit(lambda n: n + 1, nat_set, [1, 3, 5]) == 43
    assert fit(lambda x: x, itself, "anything") == "anything"


def test_registry_lookup():
    entry = lookup("set")
    root = lookup("nat").encode(2008)
    assert entry.decode(root) == [3, 4, 6, 7, 8, 9, 10]
    with pytest.raises(UnknownEncoder):
        lookup("nope")
    hb3 = lookup("hb:3")
    assert hb3.decode(lookup("nat").encode(42))  # parametric family resolves
