"""Flat encoders: fun, mset, set, nat, pmset, bits, funbits, z, string, dyadic.

The primitive converters (``nat2set``, ``mset2fun``, ...) are plain functions;
the module-level ``Encoder`` instances wire them to the root representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidDigit, LawViolation, NegativeElement, NotDyadic
from .iso import Encoder, Iso, encoder, encoder_via
from .numutil import factorize, from_base, nth_prime, prime_index, to_base


def _require_nats(ns) -> list[int]:
    for x in ns:
        if x < 0:
            raise NegativeElement(f"negative element {x} in {ns}")
    return list(ns)


# -- fun: the root itself ------------------------------------------------------

fun = encoder("fun", _require_nats, _require_nats)


# -- mset: non-decreasing sequences via successive differences ------------------

def mset2fun(ms: list[int]) -> list[int]:
    ms = sorted(_require_nats(ms))
    return [x - p for x, p in zip(ms, [0] + ms)]


def fun2mset(ns: list[int]) -> list[int]:
    out, acc = [], 0
    for x in _require_nats(ns):
        acc += x
        out.append(acc)
    return out


mset = encoder("mset", mset2fun, fun2mset)


# -- set: strictly increasing sequences ----------------------------------------

def _require_set(xs: list[int]) -> list[int]:
    xs = sorted(_require_nats(xs))
    if any(a == b for a, b in zip(xs, xs[1:])):
        raise LawViolation(f"duplicate elements in set {xs}")
    return xs


def set2fun(xs: list[int]) -> list[int]:
    ms = mset2fun(_require_set(xs))
    return ms[:1] + [x - 1 for x in ms[1:]]


def fun2set(ns: list[int]) -> list[int]:
    return [x - 1 for x in fun2mset([x + 1 for x in ns])]


set_ = encoder("set", set2fun, fun2set)


# -- nat: exponents of 2, composed with set ------------------------------------

def nat2set(n: int) -> list[int]:
    if n < 0:
        raise NegativeElement(f"expected a natural number, got {n}")
    out, x = [], 0
    while n:
        if n & 1:
            out.append(x)
        n >>= 1
        x += 1
    return out


def set2nat(xs: list[int]) -> int:
    _require_set(xs)
    return sum(1 << e for e in xs)


nat_set = Iso(nat2set, set2nat)

nat = encoder_via("nat", nat_set, set_)


def nat2fun(n: int) -> list[int]:
    return set2fun(nat2set(n))


def fun2nat(ns: list[int]) -> int:
    return set2nat(fun2set(ns))


def nat2mset(n: int) -> list[int]:
    return fun2mset(nat2fun(n))


def mset2nat(ms: list[int]) -> int:
    return fun2nat(mset2fun(ms))


nat_mset = Iso(nat2mset, mset2nat)


# -- pmset: multisets of prime positions ----------------------------------------

def nat2pmset(n: int) -> list[int]:
    if n < 0:
        raise NegativeElement(f"expected a natural number, got {n}")
    if n == 0:
        return []
    return [prime_index(p) for p in factorize(n + 1)]


def pmset2nat(ms: list[int]) -> int:
    ms = _require_nats(ms)
    if not ms:
        return 0
    v = 1
    for m in ms:
        v *= nth_prime(m)
    return v - 1


nat_pmset = Iso(nat2pmset, pmset2nat)

pmset = encoder_via("pmset", Iso(pmset2nat, nat2pmset), nat)


# -- bits: bijective base 2 ------------------------------------------------------

def nat2bits(n: int) -> list[int]:
    # binary digits of n+1, LSB first, with the implicit leading 1 dropped
    return to_base(n + 1, 2)[:-1]


def bits2nat(bs: list[int]) -> int:
    for b in bs:
        if b not in (0, 1):
            raise InvalidDigit(f"bit expected, got {b}")
    return from_base(list(bs) + [1], 2) - 1


bits = encoder_via("bits", Iso(bits2nat, nat2bits), nat)


# -- funbits: binary numbers as a chain of bit constructors ----------------------

@dataclass(frozen=True)
class FunBits:
    """Chain of binary digit constructors, least significant outermost.

    ``chain[i]`` is 0 for an O-node and 1 for an I-node; the chain terminates
    in the implicit end marker.  The empty chain denotes 0.
    """

    chain: tuple[int, ...]

    def __post_init__(self):
        for b in self.chain:
            if b not in (0, 1):
                raise InvalidDigit(f"bit expected, got {b}")


def funbits2nat(fb: FunBits) -> int:
    v = 1
    for b in reversed(fb.chain):
        v = 2 * v + b
    return v - 1


def nat2funbits(n: int) -> FunBits:
    if n < 0:
        raise NegativeElement(f"expected a natural number, got {n}")
    v, chain = n + 1, []
    while v != 1:
        chain.append(v % 2)
        v //= 2
    return FunBits(tuple(chain))


def bsucc(fb: FunBits) -> FunBits:
    """Structural successor: E -> O E, O x -> I x, I x -> O (bsucc x)."""
    chain = list(fb.chain)
    i = 0
    while i < len(chain) and chain[i] == 1:
        chain[i] = 0
        i += 1
    if i == len(chain):
        chain.append(0)
    else:
        chain[i] = 1
    return FunBits(tuple(chain))


funbits = encoder_via("funbits", Iso(funbits2nat, nat2funbits), nat)


# -- z: signed integers -----------------------------------------------------------

def nat2z(n: int) -> int:
    return n // 2 if n % 2 == 0 else (-n - 1) // 2


def z2nat(z: int) -> int:
    return -2 * z - 1 if z < 0 else 2 * z


z = encoder_via("z", Iso(z2nat, nat2z), nat)


# -- string: code points ------------------------------------------------------------

def string2fun(s: str) -> list[int]:
    return [ord(c) for c in s]


def fun2string(ns: list[int]) -> str:
    out = []
    for n in ns:
        if not 0 <= n <= 0x10FFFF or 0xD800 <= n <= 0xDFFF:
            raise LawViolation(f"code point {n} outside the Unicode scalar range")
        out.append(chr(n))
    return "".join(out)


string = encoder("string", string2fun, fun2string)


# -- dyadic: rationals in [0,1) with power-of-two denominators ------------------------

def is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return 0 <= q < 1 and d & (d - 1) == 0


def set2dyadic(xs: list[int]) -> Fraction:
    _require_set(xs)
    return sum((Fraction(1, 1 << (e + 1)) for e in xs), Fraction(0))


def dyadic2set(q: Fraction) -> list[int]:
    q = Fraction(q)
    if not is_dyadic(q):
        raise NotDyadic(f"{q} is not a dyadic rational in [0,1)")
    out, e = [], 0
    while q:
        q *= 2
        if q >= 1:
            out.append(e)
            q -= 1
        e += 1
    return out


dyadic = encoder_via("dyadic", Iso(dyadic2set, set2dyadic), set_)
