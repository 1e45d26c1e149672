"""Hereditarily finite structures via generic rank/unrank tree hylomorphisms.

A transformer ``split : Nat -> [Nat]`` whose outputs are strictly smaller
than its input lifts to a bijection between naturals and multiway trees:
unranking applies ``split`` recursively, ranking folds back with its inverse.
Both directions run on an explicit work stack with a node budget, so an
unlawful transformer raises ``NonTerminating`` instead of spinning or
overflowing the interpreter stack.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import AtomOutOfRange, NonTerminating
from .flat import nat, nat2fun, fun2nat, nat2mset, mset2nat, nat2pmset, pmset2nat, nat2set, set2nat, set_
from .iso import Encoder, Iso, borrow, borrow2, encoder, encoder_via, route

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class HTree:
    """Multiway tree with a single node kind; a leaf has no children."""

    kids: tuple["HTree", ...] = ()

    def __repr__(self) -> str:
        return "H[" + ",".join(map(repr, self.kids)) + "]"


LEAF = HTree()


def unrank(split: Callable[[int], list[int]], n: int, budget: int = DEFAULT_BUDGET) -> HTree:
    """Unfold n into a tree by recursive application of ``split``."""
    count = 1
    frames: list[tuple[list[int], list[HTree]]] = [(split(n), [])]
    while True:
        vals, built = frames[-1]
        if len(built) == len(vals):
            node = HTree(tuple(built))
            frames.pop()
            if not frames:
                return node
            frames[-1][1].append(node)
        else:
            count += 1
            if count > budget:
                raise NonTerminating(f"unrank exceeded {budget} nodes")
            frames.append((split(vals[len(built)]), []))


def rank(fuse: Callable[[list[int]], int], t: HTree) -> int:
    """Fold a tree back to a natural with the inverse transformer."""
    frames: list[tuple[tuple[HTree, ...], list[int]]] = [(t.kids, [])]
    while True:
        kids, vals = frames[-1]
        if len(vals) == len(kids):
            v = fuse(vals)
            frames.pop()
            if not frames:
                return v
            frames[-1][1].append(v)
        else:
            frames.append((kids[len(vals)].kids, []))


def tsize(t: HTree) -> int:
    """Total node count."""
    return rank(lambda xs: 1 + sum(xs), t)


def hylo(name: str, split, fuse, budget: int = DEFAULT_BUDGET) -> Encoder:
    """Encoder for trees produced by ``split`` and consumed by ``fuse``."""
    pre = Iso(lambda t: rank(fuse, t), lambda n: unrank(split, n, budget))
    return encoder_via(name, pre, nat)


hfs = hylo("hfs", nat2set, set2nat)
hff = hylo("hff", nat2fun, fun2nat)
hfm = hylo("hfm", nat2mset, mset2nat)
hfpm = hylo("hfpm", nat2pmset, pmset2nat)


# borrowed conveniences on hereditarily finite sets
def hfs_succ(t: HTree) -> HTree:
    return borrow(route(nat, hfs), lambda n: n + 1, t)


def hfs_pred(t: HTree) -> HTree:
    return borrow(route(nat, hfs), lambda n: n - 1, t)


def hfs_union(a: HTree, b: HTree) -> HTree:
    return borrow2(route(set_, hfs), lambda x, y: sorted(set(x) | set(y)), a, b)


# -- hffs: root sequences whose elements become per-element hff trees -----------

def fun2hff(ns: list[int]) -> HTree:
    return HTree(tuple(unrank(nat2fun, n) for n in ns))


def hff2fun(t: HTree) -> list[int]:
    return [rank(fun2nat, k) for k in t.kids]


hffs = encoder("hffs", hff2fun, fun2hff)


# -- urelement variants -----------------------------------------------------------

@dataclass(frozen=True)
class UAtom:
    value: int

    def __repr__(self) -> str:
        return f"A {self.value}"


@dataclass(frozen=True)
class UForest:
    kids: tuple["UTree", ...] = ()

    def __repr__(self) -> str:
        return "F[" + ",".join(map(repr, self.kids)) + "]"


UTree = Union[UAtom, UForest]


def unrank_u(split, ulimit: int, n: int, budget: int = DEFAULT_BUDGET) -> UTree:
    """Unfold with atoms: values below ulimit stay atomic."""
    if n < ulimit:
        return UAtom(n)
    count = 1
    frames: list[tuple[list[int], list[UTree]]] = [(split(n - ulimit), [])]
    while True:
        vals, built = frames[-1]
        if len(built) == len(vals):
            node = UForest(tuple(built))
            frames.pop()
            if not frames:
                return node
            frames[-1][1].append(node)
        else:
            v = vals[len(built)]
            count += 1
            if count > budget:
                raise NonTerminating(f"unrank exceeded {budget} nodes")
            if v < ulimit:
                frames[-1][1].append(UAtom(v))
            else:
                frames.append((split(v - ulimit), []))


def rank_u(fuse, ulimit: int, t: UTree) -> int:
    if isinstance(t, UAtom):
        if not 0 <= t.value < ulimit:
            raise AtomOutOfRange(f"atom {t.value} not below ulimit {ulimit}")
        return t.value
    frames: list[tuple[tuple[UTree, ...], list[int]]] = [(t.kids, [])]
    while True:
        kids, vals = frames[-1]
        if len(vals) == len(kids):
            v = ulimit + fuse(vals)
            frames.pop()
            if not frames:
                return v
            frames[-1][1].append(v)
        else:
            k = kids[len(vals)]
            if isinstance(k, UAtom):
                if not 0 <= k.value < ulimit:
                    raise AtomOutOfRange(f"atom {k.value} not below ulimit {ulimit}")
                frames[-1][1].append(k.value)
            else:
                frames.append((k.kids, []))


def make_uhfs(ulimit: int = 4) -> Encoder:
    pre = Iso(lambda t: rank_u(set2nat, ulimit, t),
              lambda n: unrank_u(nat2set, ulimit, n))
    return encoder_via("uhfs", pre, nat)


def make_uhff(ulimit: int = 4) -> Encoder:
    pre = Iso(lambda t: rank_u(fun2nat, ulimit, t),
              lambda n: unrank_u(nat2fun, ulimit, n))
    return encoder_via("uhff", pre, nat)


uhfs = make_uhfs()
uhff = make_uhff()


# -- infinite urelement supply: even codes are atoms -------------------------------

def unrank_iu(split, n: int, budget: int = DEFAULT_BUDGET) -> UTree:
    if n % 2 == 0:
        return UAtom(n // 2)
    count = 1
    frames: list[tuple[list[int], list[UTree]]] = [(split((n - 1) // 2), [])]
    while True:
        vals, built = frames[-1]
        if len(built) == len(vals):
            node = UForest(tuple(built))
            frames.pop()
            if not frames:
                return node
            frames[-1][1].append(node)
        else:
            v = vals[len(built)]
            count += 1
            if count > budget:
                raise NonTerminating(f"unrank exceeded {budget} nodes")
            if v % 2 == 0:
                frames[-1][1].append(UAtom(v // 2))
            else:
                frames.append((split((v - 1) // 2), []))


def rank_iu(fuse, t: UTree) -> int:
    if isinstance(t, UAtom):
        return 2 * t.value
    frames: list[tuple[tuple[UTree, ...], list[int]]] = [(t.kids, [])]
    while True:
        kids, vals = frames[-1]
        if len(vals) == len(kids):
            v = 1 + 2 * fuse(vals)
            frames.pop()
            if not frames:
                return v
            frames[-1][1].append(v)
        else:
            k = kids[len(vals)]
            if isinstance(k, UAtom):
                frames[-1][1].append(2 * k.value)
            else:
                frames.append((k.kids, []))


iuhfs = encoder_via(
    "iuhfs",
    Iso(lambda t: rank_iu(set2nat, t), lambda n: unrank_iu(nat2set, n)),
    nat,
)

iuhff = encoder_via(
    "iuhff",
    Iso(lambda t: rank_iu(fun2nat, t), lambda n: unrank_iu(nat2fun, n)),
    nat,
)
