"""Numeric utilities: positional bases, bit metrics, primes, multiset ops."""
from __future__ import annotations

import threading
from bisect import bisect_left

from .errors import (BaseTooSmall, InvalidDigit, NotFactorable, NotPrime,
                     UnsortedInput)


# -- positional representations ----------------------------------------------

def to_base(n: int, base: int) -> list[int]:
    """Digits of n in the given base, least significant first; 0 -> [0]."""
    if base < 2:
        raise BaseTooSmall(f"base must be >= 2, got {base}")
    if n < 0:
        raise InvalidDigit(f"cannot expand negative number {n}")
    if n == 0:
        return [0]
    ds = []
    while n:
        n, d = divmod(n, base)
        ds.append(d)
    return ds


def from_base(digits: list[int], base: int) -> int:
    if base < 2:
        raise BaseTooSmall(f"base must be >= 2, got {base}")
    v = 0
    for d in reversed(digits):
        if not 0 <= d < base:
            raise InvalidDigit(f"digit {d} out of range for base {base}")
        v = v * base + d
    return v


def to_lbits(n: int) -> list[int]:
    """Base-2 digits, most significant first."""
    return list(reversed(to_base(n, 2)))


def from_lbits(bits: list[int]) -> int:
    return from_base(list(reversed(bits)), 2)


def bitcount(n: int) -> int:
    """Smallest x >= 1 with 2^x > n."""
    return max(n.bit_length(), 1)


def max_bitcount(ns: list[int]) -> int:
    return max(map(bitcount, ns), default=0)


def to_maxbits(width: int, n: int) -> list[int]:
    """Base-2 digits padded with zeros up to the given width."""
    bs = to_base(n, 2)
    return bs + [0] * (width - len(bs))


# -- primes -------------------------------------------------------------------

class _PrimeCache:
    """Growable ascending prime table.

    Growth is serialized by a lock; the published list is append-only so
    concurrent readers always see a consistent prefix.  The cache is extended
    with a sieve, which produces the same stream as incremental trial
    division, just faster.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.limit = 7
        self.primes = [2, 3, 5, 7]

    def extend_to(self, n: int) -> None:
        if n <= self.limit:
            return
        with self._lock:
            if n <= self.limit:
                return
            top = max(n, 2 * self.limit, 1024)
            sieve = bytearray([1]) * (top + 1)
            sieve[0:2] = b"\x00\x00"
            for p in range(2, int(top ** 0.5) + 1):
                if sieve[p]:
                    sieve[p * p :: p] = bytearray(len(range(p * p, top + 1, p)))
            self.primes = [i for i in range(top + 1) if sieve[i]]
            self.limit = top

    def extend_count(self, k: int) -> None:
        # p_k < k(ln k + ln ln k) for k >= 6; overshoot a little and retry
        while len(self.primes) < k:
            import math

            guess = max(32, int(k * (math.log(k) + math.log(math.log(k)) + 1)) if k >= 6 else 32)
            self.extend_to(max(guess, 2 * self.limit))


_CACHE = _PrimeCache()


def primes():
    """Infinite ascending stream of primes: 2, 3, 5, 7, ..."""
    i = 0
    while True:
        if i >= len(_CACHE.primes):
            _CACHE.extend_to(2 * _CACHE.limit)
        yield _CACHE.primes[i]
        i += 1


def first_primes(k: int) -> list[int]:
    _CACHE.extend_count(k)
    return _CACHE.primes[:k]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= _CACHE.limit:
        ps = _CACHE.primes
        i = bisect_left(ps, n)
        return i < len(ps) and ps[i] == n
    i = 0
    while True:
        if i >= len(_CACHE.primes):
            _CACHE.extend_to(2 * _CACHE.limit)
        p = _CACHE.primes[i]
        if p * p > n:
            return True
        if n % p == 0:
            return False
        i += 1


def factorize(n: int) -> list[int]:
    """Non-decreasing prime factors of n; requires n > 1."""
    if n <= 1:
        raise NotFactorable(f"cannot factor {n}")
    out = []
    i = 0
    while n > 1:
        if i >= len(_CACHE.primes):
            _CACHE.extend_to(2 * _CACHE.limit)
        p = _CACHE.primes[i]
        if p * p > n:
            out.append(n)
            break
        while n % p == 0:
            out.append(p)
            n //= p
        i += 1
    return out


def prime_index(p: int) -> int:
    """0-based position of the prime p in the prime stream."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    _CACHE.extend_to(p)
    return bisect_left(_CACHE.primes, p)


def nth_prime(i: int) -> int:
    """Inverse of prime_index: the prime at 0-based position i."""
    _CACHE.extend_count(i + 1)
    return _CACHE.primes[i]


# -- multiset operations on non-decreasing sequences ---------------------------

def _check_sorted(xs: list[int]) -> None:
    if any(a > b for a, b in zip(xs, xs[1:])):
        raise UnsortedInput(f"expected a non-decreasing sequence, got {xs}")


def mset_inter(xs: list[int], ys: list[int]) -> list[int]:
    _check_sorted(xs)
    _check_sorted(ys)
    out, i, j = [], 0, 0
    while i < len(xs) and j < len(ys):
        if xs[i] == ys[j]:
            out.append(xs[i])
            i += 1
            j += 1
        elif xs[i] < ys[j]:
            i += 1
        else:
            j += 1
    return out


def mset_dif(xs: list[int], ys: list[int]) -> list[int]:
    _check_sorted(xs)
    _check_sorted(ys)
    out, i, j = [], 0, 0
    while i < len(xs) and j < len(ys):
        if xs[i] == ys[j]:
            i += 1
            j += 1
        elif xs[i] < ys[j]:
            out.append(xs[i])
            i += 1
        else:
            j += 1
    out.extend(xs[i:])
    return out


def mset_symdif(xs: list[int], ys: list[int]) -> list[int]:
    return sorted(mset_dif(xs, ys) + mset_dif(ys, xs))


def mset_union(xs: list[int], ys: list[int]) -> list[int]:
    # dif ++ inter ++ dif: multiplicity max of the two sides
    return sorted(mset_dif(xs, ys) + mset_inter(xs, ys) + mset_dif(ys, xs))
