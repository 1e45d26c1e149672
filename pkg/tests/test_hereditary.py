"""Hereditarily finite encoders against paper fixtures and a naive oracle."""
import pytest

from isokit.errors import AtomOutOfRange, NonTerminating
from isokit.flat import (fun2nat, mset2nat, nat, nat2fun, nat2mset, nat2set,
                         set2nat)
from isokit.hereditary import (HTree, LEAF, UAtom, UForest, hfs, hff, hffs,
                               hfm, hfpm, hfs_pred, hfs_succ, hfs_union,
                               iuhfs, iuhff, make_uhfs, rank, tsize, uhfs,
                               uhff, unrank)
from isokit.iso import convert
from isokit.toolkit import visit_as


def naive_unrank(split, n):
    """Independent reimplementation of the defining recursion."""
    return HTree(tuple(naive_unrank(split, k) for k in split(n)))


def naive_rank(fuse, t):
    return fuse([naive_rank(fuse, k) for k in t.kids])


def h(*kids):
    return HTree(tuple(kids))


def test_unrank_fixtures():
    assert unrank(nat2set, 0) == LEAF
    assert repr(unrank(nat2set, 42)) == "H[H[H[]],H[H[],H[H[]]],H[H[],H[H[H[]]]]]"
    assert rank(set2nat, unrank(nat2set, 42)) == 42


def test_tsize():
    assert tsize(LEAF) == 1
    assert tsize(convert(hff, nat, 42)) == 7
    assert tsize(convert(hff, nat, 123456789012345678901234567890)) == 91


def test_hfs_conveniences():
    assert hfs_succ(LEAF) == h(LEAF)
    assert hfs_pred(h(LEAF)) == LEAF
    assert hfs_union(h(h(LEAF)), h(LEAF)) == h(LEAF, h(LEAF))


def test_tree_encoder_fixtures():
    assert repr(convert(hff, nat, 2008)) == "H[H[H[],H[]],H[],H[H[]],H[],H[],H[],H[]]"
    assert repr(convert(hfpm, nat, 2008)) == "H[H[H[],H[]],H[H[],H[]],H[H[H[],H[H[]]]]]"
    assert convert(nat, hfpm, convert(hfpm, nat, 2008)) == 2008
    assert repr(convert(hfm, nat, 2008)) == (
        "H[H[H[],H[]],H[H[],H[]],H[H[H[H[]]]],H[H[H[H[]]]],"
        "H[H[H[H[]]]],H[H[H[H[]]]],H[H[H[H[]]]]]")


def test_hffs_sparse_numbers():
    t = hffs.decode([2 ** 65, 2 ** 131])
    assert repr(t) == ("H[H[H[H[],H[H[],H[H[]]]]],"
                       "H[H[H[],H[],H[H[],H[H[]]]]]]")
    assert hffs.encode(t) == [2 ** 65, 2 ** 131]
    assert hffs.decode([]) == LEAF
    assert hffs.encode(hffs.decode([0, 1, 2])) == [0, 1, 2]


def test_ackermann_roundtrip_exhaustive():
    for n in range(1 << 10):
        assert rank(set2nat, unrank(nat2set, n)) == n


def test_matches_naive_recursion_oracle():
    for n in range(513):
        for split, fuse in ((nat2set, set2nat), (nat2fun, fun2nat), (nat2mset, mset2nat)):
            t = naive_unrank(split, n)
            assert unrank(split, n) == t
            assert rank(fuse, t) == naive_rank(fuse, t) == n


def test_density_inequality_hff_vs_hfs():
    for n in range(1 << 10):
        assert tsize(unrank(nat2fun, n)) <= tsize(unrank(nat2set, n))


def test_budget_guard():
    with pytest.raises(NonTerminating):
        unrank(lambda n: [n + 1], 0, budget=100)


def test_urelement_fixtures():
    assert uhfs.decode(nat.encode(3)) == UAtom(3)
    assert uhfs.decode(nat.encode(4)) == UForest(())
    assert uhfs.decode(nat.encode(5)) == UForest((UAtom(0),))
    with pytest.raises(AtomOutOfRange):
        uhfs.encode(UAtom(4))
    wide = make_uhfs(ulimit=10)
    assert wide.decode(nat.encode(9)) == UAtom(9)
    assert wide.encode(wide.decode(nat.encode(123456))) == nat.encode(123456)


def test_infinite_urelement_fixtures():
    assert iuhfs.decode(nat.encode(0)) == UAtom(0)
    assert iuhfs.decode(nat.encode(1)) == UForest(())
    assert iuhfs.decode(nat.encode(3)) == UForest((UAtom(0),))
    assert iuhff.decode(nat.encode(2)) == UAtom(1)


def test_hereditary_roundtrips():
    for enc in (hfs, hff, hfm, hffs, uhfs, uhff, iuhfs, iuhff):
        for n in range(300):
            assert visit_as(enc, n) == n
    for n in range(300):
        assert visit_as(hfpm, n) == n
