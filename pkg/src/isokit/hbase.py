"""Hereditary base-k representations and Goodstein sequences."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseTooSmall, CoeffOutOfRange
from .flat import nat
from .iso import Encoder, Iso, encoder_via
from .numutil import to_base


@dataclass(frozen=True)
class HB:
    """One term: coefficient times base to an exponent, itself a forest."""

    coeff: int
    exps: tuple["HB", ...] = ()

    def __repr__(self) -> str:
        return f"HB {self.coeff} [" + ",".join(map(repr, self.exps)) + "]"


def nat2kpoly(k: int, n: int) -> list[tuple[int, int]]:
    """Nonzero (coefficient, exponent) terms of n in base k, exponents ascending."""
    if k < 2:
        raise BaseTooSmall(f"base must be >= 2, got {k}")
    if n == 0:
        return []
    return [(d, e) for e, d in enumerate(to_base(n, k)) if d != 0]


def kpoly2nat(k: int, ps: list[tuple[int, int]]) -> int:
    if k < 2:
        raise BaseTooSmall(f"base must be >= 2, got {k}")
    return sum(d * k ** e for d, e in ps)


def nat2hb(k: int, n: int) -> tuple[HB, ...]:
    """Hereditary base-k forest: exponents are expanded recursively."""
    if k < 2:
        raise BaseTooSmall(f"base must be >= 2, got {k}")
    if n == 0:
        return ()
    if n < k:
        return (HB(n),)
    return tuple(HB(d, nat2hb(k, e)) for d, e in nat2kpoly(k, n))


def hb2nat(k: int, forest: tuple[HB, ...]) -> int:
    if k < 2:
        raise BaseTooSmall(f"base must be >= 2, got {k}")
    total = 0
    for t in forest:
        if not 1 <= t.coeff < k:
            raise CoeffOutOfRange(f"coefficient {t.coeff} not in [1..{k - 1}]")
        total += t.coeff * k ** hb2nat(k, t.exps)
    return total


def hb(k: int) -> Encoder:
    """Parametric encoder family over hereditary base-k forests."""
    return encoder_via(f"hb:{k}", Iso(lambda f: hb2nat(k, f), lambda n: nat2hb(k, n)), nat)


def goodstein_step(k: int, n: int) -> int:
    """Reinterpret the base-k forest of n in base k+1, then subtract one."""
    return hb2nat(k + 1, nat2hb(k, n)) - 1


def goodstein(m: int, limit: int = 64) -> list[int]:
    """Prefix of the Goodstein sequence of m, at most ``limit`` elements."""
    out, k, n = [], 2, m
    while n != 0 and len(out) < limit:
        out.append(n)
        n = goodstein_step(k, n)
        k += 1
    return out
