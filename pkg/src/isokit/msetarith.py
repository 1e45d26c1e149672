"""Arithmetic analogies transported through multiset encodings.

``mprod`` is multiset concatenation seen from the naturals; it behaves like a
product (commutative monoid) whose prime-indexed sibling ``pmprod`` coincides
with ``(n+1)*(m+1)-1``.  ``mgcd``/``mlcm``/``mdiv`` are the multiset
intersection/union/difference analogues of gcd, lcm and exact division.
"""
from __future__ import annotations

from .errors import NotDivisible
from .flat import fun2mset, mset, mset2fun, nat, nat2mset, mset2nat, nat2set, pmset, set2nat
from .iso import borrow_from
from .numutil import mset_dif, mset_inter, mset_union


def mprod(x: int, y: int) -> int:
    """Product analogue with identity 0: concatenate the multiset codes."""
    return borrow_from(mset, lambda a, b: sorted(a + b), nat, x, y)


def mexp(n: int, k: int) -> int:
    v = 0
    for _ in range(k):
        v = mprod(n, v)
    return v


def mprod1(x: int, y: int) -> int:
    """Shifted variant with identity 1; 0 is absorbing."""
    if x == 0 or y == 0:
        return 0
    return mprod(x - 1, y - 1) + 1


def mexp1(n: int, k: int) -> int:
    v = 1
    for _ in range(k):
        v = mprod1(n, v)
    return v


def pmprod(n: int, m: int) -> int:
    """Product analogue through the prime-position multiset encoding."""
    return borrow_from(pmset, lambda a, b: sorted(a + b), nat, n, m)


def pmprod_closed(n: int, m: int) -> int:
    return (n + 1) * (m + 1) - 1


def mgcd(x: int, y: int) -> int:
    return borrow_from(mset, mset_inter, nat, x, y)


def mlcm(x: int, y: int) -> int:
    return borrow_from(mset, mset_union, nat, x, y)


def mdiv(x: int, y: int) -> int:
    """Multiset difference analogue of exact division.

    Requires y's multiset code to be contained in x's, so that
    ``mdiv(mprod(a, b), b) == a`` holds.
    """
    xs, ys = nat2mset(x), nat2mset(y)
    if mset_dif(ys, xs):
        raise NotDivisible(f"multiset of {y} not contained in multiset of {x}")
    return mset2nat(mset_dif(xs, ys))


def strange_sort(xs: list[int]) -> list[int]:
    """Sort distinct naturals with no comparisons: fold to a nat and unfold."""
    return nat2set(set2nat(list(xs)))


def strange_sort_multi(xs: list[int]) -> list[int]:
    """Comparison-free sort allowing repeats, via the multiset code."""
    return fun2mset(mset2fun(list(xs)))
