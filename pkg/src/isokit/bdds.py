"""Binary decision diagrams as unfoldings of truth tables.

A truth table on n variables is a natural below 2^(2^n).  Splitting it
recursively with the bit-interleaving unpairing function yields the complete
decision tree of its Shannon expansion; fusing back with the pairing function
or evaluating the tree as a boolean function both recover the table.
Ranking across all variable counts shifts each block by the count of boolean
functions with fewer variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import (LeafOutOfRange, MalformedTree, TooManyVariables,
                     TruthTableTooLarge)
from .flat import nat
from .iso import Iso, encoder_via
from .pairing import bitpair, bitunpair
from .perms import all_permutations


@dataclass(frozen=True)
class Leaf:
    value: int  # 0 or 1

    def __repr__(self) -> str:
        return f"B{self.value}"


@dataclass(frozen=True)
class Decision:
    var: int
    then: "BTree"
    els: "BTree"

    def __repr__(self) -> str:
        return f"(D {self.var} {self.then!r} {self.els!r})"


BTree = Union[Leaf, Decision]

B0 = Leaf(0)
B1 = Leaf(1)


@dataclass(frozen=True)
class BDD:
    nvars: int
    root: BTree

    def __repr__(self) -> str:
        return f"BDD {self.nvars} {self.root!r}"


def unfold_bdd(nvars: int, tt: int) -> BDD:
    """Complete depth-nvars decision tree of the truth table tt."""
    if not 0 <= tt < (1 << (1 << nvars)):
        raise TruthTableTooLarge(f"truth table {tt} needs more than {nvars} variables")

    def split(n: int, t: int) -> BTree:
        if n < 1:
            return B0 if t == 0 else B1
        a, b = bitunpair(t)
        return Decision(n - 1, split(n - 1, a), split(n - 1, b))

    return BDD(nvars, split(nvars, tt))


def fold_bdd(b: BDD) -> tuple[int, int]:
    """(nvars, tt) by structural pairing; variable labels are ignored."""
    def fuse(t: BTree) -> int:
        if isinstance(t, Leaf):
            return t.value
        return bitpair((fuse(t.then), fuse(t.els)))

    return (b.nvars, fuse(b.root))


def _check_complete(b: BDD) -> None:
    # unfolded trees are full depth-nvars trees labelled nvars-1 .. 0
    def walk(t: BTree, depth: int) -> None:
        want = b.nvars - 1 - depth
        if isinstance(t, Leaf):
            if want != -1:
                raise MalformedTree(f"leaf at depth {depth} of a {b.nvars}-var tree")
            return
        if t.var != want:
            raise MalformedTree(f"variable {t.var} at depth {depth}, expected {want}")
        walk(t.then, depth + 1)
        walk(t.els, depth + 1)

    walk(b.root, 0)


def _check_vars(b: BDD) -> None:
    def walk(t: BTree) -> None:
        if isinstance(t, Leaf):
            return
        if not 0 <= t.var < b.nvars:
            raise MalformedTree(f"variable {t.var} out of range for {b.nvars} vars")
        walk(t.then)
        walk(t.els)

    walk(b.root)


def bigone(nvars: int) -> int:
    """Truth table of the constant-1 function."""
    return (1 << (1 << nvars)) - 1


def var_mn(mask: int, n: int, k: int) -> int:
    """Truth table of the projection on variable k, under an n-variable mask."""
    return mask // ((1 << (1 << (n - k - 1))) + 1)


def ite_(x: int, t: int, e: int) -> int:
    """Bitvector if-then-else on truth tables."""
    return ((t ^ e) & x) ^ e


def eval_bdd(b: BDD) -> int:
    """Boolean evaluation of the tree; equals fold_bdd on unfolded trees."""
    _check_vars(b)
    m, n = bigone(b.nvars), b.nvars

    def ev(t: BTree) -> int:
        if isinstance(t, Leaf):
            return m if t.value else 0
        return ite_(var_mn(m, n, t.var), ev(t.then), ev(t.els))

    return ev(b.root)


# -- ranking across variable counts ---------------------------------------------------

def bsum(n: int) -> int:
    """Count of boolean functions with fewer than n variables (A060803)."""
    if n == 0:
        return 0
    total = 2
    for i in range(1, n):
        total += 1 << (1 << i)
    return total


def bsums(count: int) -> list[int]:
    return [bsum(i) for i in range(count)]


def to_bsum(n: int) -> tuple[int, int]:
    k = 0
    while bsum(k + 1) <= n:
        k += 1
    return (k, n - bsum(k))


def nat2bdd(n: int) -> BDD:
    k, tt = to_bsum(n)
    return unfold_bdd(k, tt)


def bdd2nat(b: BDD) -> int:
    # pairing-based ranking is only faithful on complete unfolded trees
    _check_complete(b)
    return bsum(b.nvars) + fold_bdd(b)[1]


def ev_bdd2nat(b: BDD) -> int:
    return bsum(b.nvars) + eval_bdd(b)


def nat2rbdd(n: int) -> BDD:
    return bdd_reduce(nat2bdd(n))


pbdd = encoder_via("pbdd", Iso(bdd2nat, nat2bdd), nat)
bdd = encoder_via("bdd", Iso(ev_bdd2nat, nat2bdd), nat)
rbdd = encoder_via("rbdd", Iso(ev_bdd2nat, nat2rbdd), nat)


# -- reduction and sizes ---------------------------------------------------------------

def bdd_reduce(b: BDD) -> BDD:
    """Collapse decisions whose branches are identical."""
    def red(t: BTree) -> BTree:
        if isinstance(t, Leaf):
            return t
        l, r = red(t.then), red(t.els)
        return l if l == r else Decision(t.var, l, r)

    return BDD(b.nvars, red(b.root))


def bdd_size(b: BDD) -> int:
    """Expression-tree node count, plus one for the wrapper."""
    def sz(t: BTree) -> int:
        if isinstance(t, Leaf):
            return 1
        return 1 + sz(t.then) + sz(t.els)

    return 1 + sz(b.root)


def robdd_size(b: BDD) -> int:
    """Distinct-subtree count plus wrapper: size with sharing made implicit."""
    keys: dict[int, tuple] = {}
    distinct: set[tuple] = set()

    def key(t: BTree) -> tuple:
        got = keys.get(id(t))
        if got is not None:
            return got
        if isinstance(t, Leaf):
            k: tuple = ("B", t.value)
        else:
            k = ("D", t.var, key(t.then), key(t.els))
        keys[id(t)] = k
        distinct.add(k)
        return k

    key(b.root)
    return 1 + len(distinct)


# -- arbitrary variable order -----------------------------------------------------------

def to_bdd(vs: list[int], tt: int) -> BDD:
    """Shannon expansion of tt along the variable order vs."""
    n = len(vs)
    m = bigone(n)
    if not 0 <= tt <= m:
        raise TruthTableTooLarge(f"bad arg in to_bdd: {tt}")
    if sorted(vs) != list(range(n)):
        raise MalformedTree(f"{vs} is not a variable order")

    def go(rest: list[int], t: int) -> BTree:
        if not rest:
            return B0 if t == 0 else B1
        v = rest[0]
        cond = var_mn(m, n, v)
        f1 = cond & t
        f0 = (m ^ cond) & t
        return Decision(v, go(rest[1:], f1), go(rest[1:], f0))

    return BDD(n, go(list(vs), tt))


def to_rbdd(vs: list[int], tt: int) -> BDD:
    return bdd_reduce(to_bdd(vs, tt))


def from_bdd(b: BDD) -> int:
    return eval_bdd(b)


def to_min_bdd(nvars: int, tt: int) -> BDD:
    """Smallest reduced BDD over all nvars! variable orders.

    Ties keep the first order found in permutation-rank order.
    """
    if nvars > 7:
        raise TooManyVariables(f"minimization guarded to 7 variables, got {nvars}")
    best: Optional[tuple[int, BDD]] = None
    for vs in all_permutations(nvars):
        b = to_rbdd(vs, tt)
        s = robdd_size(b)
        if best is None or s < best[0]:
            best = (s, b)
    assert best is not None
    return best[1]


# -- multi-terminal variant ---------------------------------------------------------------

@dataclass(frozen=True)
class MLeaf:
    value: int

    def __repr__(self) -> str:
        return f"(L {self.value})"


@dataclass(frozen=True)
class MBranch:
    var: int
    then: "MTree"
    els: "MTree"

    def __repr__(self) -> str:
        return f"(M {self.var} {self.then!r} {self.els!r})"


MTree = Union[MLeaf, MBranch]


@dataclass(frozen=True)
class MTBDD:
    mbits: int
    nvars: int
    root: MTree

    def __repr__(self) -> str:
        return f"MTBDD {self.mbits} {self.nvars} {self.root!r}"


def to_mtbdd(mbits: int, nvars: int, tt: int) -> MTBDD:
    """Depth-nvars unfolding with leaves below 2^mbits."""
    mlimit = 1 << mbits
    if not 0 <= tt < mlimit ** (1 << nvars):
        raise TruthTableTooLarge(f"truth table {tt} too large for {mbits}x{nvars}")

    def split(n: int, t: int) -> MTree:
        if n < 1:
            return MLeaf(t)
        a, b = bitunpair(t)
        return MBranch(n - 1, split(n - 1, a), split(n - 1, b))

    return MTBDD(mbits, nvars, split(nvars, tt))


def from_mtbdd(m: MTBDD) -> int:
    mlimit = 1 << m.mbits

    def fuse(t: MTree, depth: int) -> int:
        if isinstance(t, MLeaf):
            if depth != m.nvars:
                raise MalformedTree(f"leaf at depth {depth} of a {m.nvars}-var tree")
            if not 0 <= t.value < mlimit:
                raise LeafOutOfRange(f"leaf {t.value} not below 2^{m.mbits}")
            return t.value
        return bitpair((fuse(t.then, depth + 1), fuse(t.els, depth + 1)))

    return fuse(m.root, 0)
