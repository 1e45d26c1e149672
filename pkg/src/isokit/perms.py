"""Factoradics, Lehmer codes, permutation ranking and the global perm encoder.

Permutations of every size share a single numbering: size-k permutations
occupy the block starting at the sum of factorials below k!, and the offset
inside a block is the factoradic value of the permutation's Lehmer code.
"""
from __future__ import annotations

import math

from .errors import (DigitOutOfRange, IndexOutOfRange, NotAPermutation,
                     RankTooLarge, TooLarge)
from .flat import nat
from .hereditary import hylo
from .iso import Iso, encoder_via


def fr(n: int) -> list[int]:
    """Factoradic digits of n, position i weighted by i!, ascending."""
    if n == 0:
        return [0]
    ds, j = [], 1
    while n:
        ds.append(n % j)
        n //= j
        j += 1
    return ds


def _rf_eval(ns: list[int]) -> int:
    # total mixed-radix evaluation, no digit constraint (sf needs all-ones)
    total, w = 0, 1
    for i, d in enumerate(ns):
        if i > 0:
            w *= i
        total += d * w
    return total


def rf(ns: list[int]) -> int:
    """Value of ascending factoradic digits; digit i must not exceed i."""
    for i, d in enumerate(ns):
        if not 0 <= d <= i:
            raise DigitOutOfRange(f"factoradic digit {d} at position {i}")
    return _rf_eval(ns)


def fl(n: int) -> list[int]:
    """Descending-order factoradic digits (most significant first)."""
    return list(reversed(fr(n)))


def lf(ns: list[int]) -> int:
    return rf(list(reversed(ns)))


def perm2lehmer(ps: list[int]) -> list[int]:
    """Lehmer code: for each position, how many later entries are smaller."""
    return [sum(1 for y in ps[i + 1:] if y < x) for i, x in enumerate(ps)]


def apply_lehmer(ls: list[int], domain: list[int]) -> list[int]:
    """Rebuild a permutation of ``domain`` by indexed picking."""
    if len(ls) != len(domain):
        raise IndexOutOfRange("Lehmer code and domain lengths differ")
    pool = list(domain)
    out = []
    for l in ls:
        if not 0 <= l < len(pool):
            raise IndexOutOfRange(f"Lehmer digit {l} with {len(pool)} left")
        out.append(pool.pop(l))
    return out


def _check_perm(ps: list[int]) -> list[int]:
    if sorted(ps) != list(range(len(ps))):
        raise NotAPermutation(f"{ps} is not a permutation of 0..{len(ps) - 1}")
    return list(ps)


def perm2nth(ps: list[int]) -> tuple[int, int]:
    """(size, rank) of a permutation, ranked by its Lehmer code's lf-value."""
    ls = perm2lehmer(_check_perm(ps))
    return (len(ls), lf(ls))


def nth2perm(size: int, n: int) -> list[int]:
    """The n-th permutation of the given size, 0 <= n < size!."""
    if n >= math.factorial(size):
        raise RankTooLarge(f"rank {n} >= {size}!")
    xs = fl(n)
    ls = [0] * (size - len(xs)) + xs
    return apply_lehmer(ls, list(range(size)))


def sf(n: int) -> int:
    """Sum of factorials 0! + 1! + ... + (n-1)!: block offsets of the numbering."""
    return _rf_eval([1] * n)


def to_sf(n: int) -> tuple[int, int]:
    """Split n into (block index k, offset) with sf(k) <= n < sf(k+1)."""
    k = 0
    while sf(k + 1) <= n:
        k += 1
    return (k, n - sf(k))


def nat2perm(n: int) -> list[int]:
    if n == 0:
        return []
    k, r = to_sf(n)
    return nth2perm(k, r)


def perm2nat(ps: list[int]) -> int:
    if not ps:
        return 0
    size, r = perm2nth(ps)
    return sf(size) + r


perm = encoder_via("perm", Iso(perm2nat, nat2perm), nat)

hfp = hylo("hfp", nat2perm, perm2nat)


def all_permutations(n: int) -> list[list[int]]:
    """All n! permutations of size n, in rank order; guarded to n <= 8."""
    if n > 8:
        raise TooLarge(f"all_permutations guarded to n <= 8, got {n}")
    if n == 0:
        return [[]]
    return [nth2perm(n, i) for i in range(math.factorial(n))]
