"""Pairing/unpairing bijections and everything built directly on them:
ordered/unordered/multiset/signed pairs, Gauss-integer arithmetic, cons-lists,
pairing-based multiset codes, tuple codes and the tuple-based sequence code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import EmptyTuple, LawViolation, NegativeElement, NotTwoDistinct
from .flat import (fun2nat, fun2mset, fun2set, mset2fun, nat, nat2fun, nat2set,
                   nat2z, set2fun, set2nat, z2nat)
from .hereditary import hylo
from .iso import Iso, encoder_via
from .numutil import from_base, max_bitcount, to_base, to_maxbits


# -- Pepis pairing: 2^x(2y+1)-1 ------------------------------------------------

def pepis_pair(p: tuple[int, int]) -> int:
    x, y = p
    if x < 0 or y < 0:
        raise NegativeElement(f"pair components must be naturals, got {p}")
    return (1 << x) * (2 * y + 1) - 1


def pepis_unpair(n: int) -> tuple[int, int]:
    m = n + 1
    x = (m & -m).bit_length() - 1
    return (x, ((m >> x) - 1) // 2)


def pepis_pair_alt(p: tuple[int, int]) -> int:
    """Same pairing via sequence surgery: prepend x to the code of y."""
    x, y = p
    return fun2nat([x] + nat2fun(y)) - 1


def pepis_unpair_alt(n: int) -> tuple[int, int]:
    x, *ns = nat2fun(n + 1)
    return (x, fun2nat(ns))


def rpepis_pair(p: tuple[int, int]) -> int:
    x, y = p
    return pepis_pair((y, x))


def rpepis_unpair(n: int) -> tuple[int, int]:
    x, y = pepis_unpair(n)
    return (y, x)


pnat2 = encoder_via("pnat2", Iso(pepis_pair, pepis_unpair), nat)
rpnat2 = encoder_via("rpnat2", Iso(rpepis_pair, rpepis_unpair), nat)


# -- bit-interleaving pairing ----------------------------------------------------

def bitpair(p: tuple[int, int]) -> int:
    """First component on even bit positions, second on odd ones."""
    i, j = p
    if i < 0 or j < 0:
        raise NegativeElement(f"pair components must be naturals, got {p}")
    return set2nat([2 * e for e in nat2set(i)] + [2 * e + 1 for e in nat2set(j)])


def bitunpair(n: int) -> tuple[int, int]:
    es = nat2set(n)
    return (set2nat([e // 2 for e in es if e % 2 == 0]),
            set2nat([e // 2 for e in es if e % 2 == 1]))


nat2 = encoder_via("nat2", Iso(bitpair, bitunpair), nat)


# -- unordered pairs (two-element sets) -------------------------------------------

def pair2unord_pair(p: tuple[int, int]) -> list[int]:
    return fun2set(list(p))


def unord_pair2pair(ab: list[int]) -> tuple[int, int]:
    if len(ab) != 2 or ab[0] == ab[1]:
        raise NotTwoDistinct(f"expected two distinct naturals, got {ab}")
    x, y = set2fun(list(ab))
    return (x, y)


def unord_pair(ab: list[int]) -> int:
    return bitpair(unord_pair2pair(ab))


def unord_unpair(n: int) -> list[int]:
    return pair2unord_pair(bitunpair(n))


set2 = encoder_via("set2", Iso(unord_pair2pair, pair2unord_pair), nat2)
set2b = encoder_via("set2b", Iso(unord_pair, unord_unpair), nat)


# -- two-element multisets ---------------------------------------------------------

def pair2mset_pair(p: tuple[int, int]) -> tuple[int, int]:
    a, b = fun2mset(list(p))
    return (a, b)


def mset_unpair2pair(ab: tuple[int, int]) -> tuple[int, int]:
    x, y = mset2fun(list(ab))
    return (x, y)


def mset_pair(ab: tuple[int, int]) -> int:
    return bitpair(mset_unpair2pair(ab))


def mset_unpair(n: int) -> tuple[int, int]:
    return pair2mset_pair(bitunpair(n))


mset2 = encoder_via("mset2", Iso(mset_unpair2pair, pair2mset_pair), nat2)


# -- signed pairs -------------------------------------------------------------------

def zpair(p: tuple[int, int]) -> int:
    """Signed result: bitpair conjugated componentwise by the z<->nat bijection."""
    x, y = p
    return nat2z(bitpair((z2nat(x), z2nat(y))))


def zunpair(v: int) -> tuple[int, int]:
    n, m = bitunpair(z2nat(v))
    return (nat2z(n), nat2z(m))


def mzpair(p: tuple[int, int]) -> int:
    x, y = p
    return nat2z(mset_pair((z2nat(x), z2nat(y))))


def mzunpair(v: int) -> tuple[int, int]:
    n, m = mset_unpair(z2nat(v))
    return (nat2z(n), nat2z(m))


def _z_nonneg(pairf: Callable, p) -> int:
    v = pairf(p)
    if v < 0:
        raise LawViolation(f"{p} is outside the encoder's lawful range")
    return v


z2 = encoder_via("z2", Iso(lambda p: _z_nonneg(zpair, p), zunpair), nat)
mz2 = encoder_via("mz2", Iso(lambda p: _z_nonneg(mzpair, p), mzunpair), nat)


# -- Gauss integers packed as signed numbers ------------------------------------------

def gauss_sum(ab: int, cd: int) -> int:
    a, b = mzunpair(ab)
    c, d = mzunpair(cd)
    return mzpair((a + c, b + d))


def gauss_dif(ab: int, cd: int) -> int:
    a, b = mzunpair(ab)
    c, d = mzunpair(cd)
    return mzpair((a - c, b - d))


def gauss_prod(ab: int, cd: int) -> int:
    a, b = mzunpair(ab)
    c, d = mzunpair(cd)
    return mzpair((a * c - b * d, b * c + a * d))


# -- algebraic identities of the pairing family ----------------------------------------

def bitlift(x: int) -> int:
    return bitpair((x, 0))


def bitlift_alt(x: int) -> int:
    return from_base(to_base(x, 2), 4)


def bitclip(n: int) -> int:
    return bitunpair(n)[0]


def bitclip_alt(n: int) -> int:
    return from_base([d // 2 for d in to_base(2 * n, 4)], 2)


def bitpair_add(p):
    x, y = p
    return bitpair((x, 0)) + bitpair((0, y))


def xbitpair(p):
    x, y = p
    return bitpair((x, 0)) ^ bitpair((0, y))


def obitpair(p):
    x, y = p
    return bitpair((x, 0)) | bitpair((0, y))


def pair_product(p) -> int:
    x, y = p
    a, b = bitunpair(bitpair((x, 0)) * bitpair((0, y)))
    return a + b


def bitpair_mset(p):
    x, y = p
    return mset_pair((min(x, y), x + y))


def bitpair_unord(p):
    x, y = p
    return unord_pair([min(x, y), x + y + 1])


def mset_pair_bit(ab):
    a, b = ab
    return bitpair((min(a, b), max(a, b) - min(a, b)))


def mset_pair_unord(ab):
    a, b = ab
    return unord_pair([min(a, b), max(a, b) + 1])


def unord_pair_bit(ab):
    a, b = min(ab), max(ab)
    return bitpair((a, b - a - 1))


def unord_pair_mset(ab):
    a, b = min(ab), max(ab)
    return mset_pair((a, b - 1))


def pairing_identities(single: int = 128, paired: int = 32) -> list[tuple[str, bool]]:
    """Evaluate every pairing identity over small ranges; (name, holds) pairs."""
    singles = range(single)
    pairs = [(x, y) for x in range(paired) for y in range(paired)]
    distinct = [(x, y) for x, y in pairs if x != y]
    checks = [
        ("bitlift == base2-as-base4", all(bitlift(n) == bitlift_alt(n) for n in singles)),
        ("bitclip == base4-halved-as-base2", all(bitclip(n) == bitclip_alt(n) for n in singles)),
        ("bitclip . bitlift == id", all(bitclip(bitlift(n)) == n for n in singles)),
        ("bitpair(0,n) == 2*bitpair(n,0)", all(bitpair((0, n)) == 2 * bitpair((n, 0)) for n in singles)),
        ("bitpair(0,n) == 2*bitlift(n)", all(bitpair((0, n)) == 2 * bitlift(n) for n in singles)),
        ("bitpair(n,n) == 3*bitlift(n)", all(bitpair((n, n)) == 3 * bitlift(n) for n in singles)),
        ("bitpair(2^n,0) == (2^n)^2", all(bitpair((1 << n, 0)) == (1 << n) ** 2 for n in range(17))),
        ("bitpair(2^2^n+1,0) == 2^2^(n+1)+1",
         all(bitpair((2 ** (2 ** n) + 1, 0)) == 2 ** (2 ** (n + 1)) + 1 for n in range(1, 6))),
        ("bitpair == sum of lifted halves", all(bitpair(p) == bitpair_add(p) for p in pairs)),
        ("bitpair == xor of lifted halves", all(bitpair(p) == xbitpair(p) for p in pairs)),
        ("bitpair == or of lifted halves", all(bitpair(p) == obitpair(p) for p in pairs)),
        ("bitpair(x,y) == bitlift(x)+2*bitlift(y)",
         all(bitpair((x, y)) == bitlift(x) + 2 * bitlift(y) for x, y in pairs)),
        ("pair_product == *", all(pair_product(p) == p[0] * p[1] for p in pairs)),
        ("bitpair == mset_pair(min,x+y)", all(bitpair(p) == bitpair_mset(p) for p in pairs)),
        ("bitpair == unord_pair[min,x+y+1]", all(bitpair(p) == bitpair_unord(p) for p in pairs)),
        ("mset_pair == bitpair(min,max-min)", all(mset_pair(p) == mset_pair_bit(p) for p in pairs)),
        ("mset_pair == unord_pair[min,max+1]", all(mset_pair(p) == mset_pair_unord(p) for p in pairs)),
        ("unord_pair == bitpair(min,max-min-1)",
         all(unord_pair(list(p)) == unord_pair_bit(p) for p in distinct)),
        ("unord_pair == mset_pair(min,max-1)",
         all(unord_pair(list(p)) == unord_pair_mset(p) for p in distinct)),
        ("pepis_pair == sequence-surgery variant",
         all(pepis_pair(p) == pepis_pair_alt(p) for p in pairs)),
    ]
    return checks


# -- cons-lists ---------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    value: int

    def __repr__(self) -> str:
        return f"Atom {self.value}"


@dataclass(frozen=True)
class Cons:
    head: "CList"
    tail: "CList"

    def __repr__(self) -> str:
        return f"Cons({self.head!r},{self.tail!r})"


CList = Union[Atom, Cons]


def nat2cons(n: int) -> CList:
    """Atoms live on even numbers, cons cells on odd ones."""
    POST = object()
    work: list = [n]
    vals: list[CList] = []
    while work:
        item = work.pop()
        if item is POST:
            t = vals.pop()
            h = vals.pop()
            vals.append(Cons(h, t))
        elif item % 2 == 0:
            vals.append(Atom(item // 2))
        else:
            h, t = pepis_unpair((item - 1) // 2)
            work.append(POST)
            work.append(t)
            work.append(h)
    return vals[0]


def cons2nat(c: CList) -> int:
    if isinstance(c, Atom):
        if c.value < 0:
            raise NegativeElement(f"negative atom {c.value}")
        return 2 * c.value
    # fold with an explicit stack to survive long spines
    POST = object()
    work: list = [c]
    vals: list[int] = []
    while work:
        item = work.pop()
        if item is POST:
            t = vals.pop()
            h = vals.pop()
            vals.append(2 * pepis_pair((h, t)) + 1)
        elif isinstance(item, Atom):
            if item.value < 0:
                raise NegativeElement(f"negative atom {item.value}")
            vals.append(2 * item.value)
        else:
            work.append(POST)
            work.append(item.tail)
            work.append(item.head)
    return vals[0]


clist = encoder_via("clist", Iso(cons2nat, nat2cons), nat)


# -- pairing-based multiset codes ------------------------------------------------------

def mset2nat_by(pairf: Callable, ms: list[int]) -> int:
    """Run-length group a multiset, pair (count-1, compacted head), fuse."""
    ms = sorted(ms)
    if ms and ms[0] < 0:
        raise NegativeElement(f"negative element in {ms}")
    groups: list[tuple[int, int]] = []
    for x in ms:
        if groups and groups[-1][1] == x:
            groups[-1] = (groups[-1][0] + 1, x)
        else:
            groups.append((1, x))
    xs = [c - 1 for c, _ in groups]
    ys = set2fun([v for _, v in groups])
    return fun2nat([pairf((x, y)) for x, y in zip(xs, ys)])


def nat2mset_by(unpairf: Callable, n: int) -> list[int]:
    ps = [unpairf(x) for x in nat2fun(n)]
    zs = fun2set([y for _, y in ps])
    out: list[int] = []
    for (x, _), zv in zip(ps, zs):
        out.extend([zv] * (x + 1))
    return out


def bmset2nat(ms: list[int]) -> int:
    return mset2nat_by(bitpair, ms)


def nat2bmset(n: int) -> list[int]:
    return nat2mset_by(bitunpair, n)


def bmset2nat_p(ms: list[int]) -> int:
    return mset2nat_by(pepis_pair, ms)


def nat2bmset_p(n: int) -> list[int]:
    return nat2mset_by(pepis_unpair, n)


bmset = encoder_via("bmset", Iso(bmset2nat, nat2bmset), nat)
bmset2 = encoder_via("bmset2", Iso(bmset2nat_p, nat2bmset_p), nat)

hfbm = hylo("hfbm", nat2bmset, bmset2nat)
hfbm2 = hylo("hfbm2", nat2bmset_p, bmset2nat_p)


# -- tuple codes: k-way bit matrix transposition ----------------------------------------

def to_tuple(k: int, n: int) -> list[int]:
    """Split n into a k-tuple by transposing its base-2^k digit bit matrix."""
    if k < 1:
        raise EmptyTuple("tuple width must be >= 1")
    rows = [to_maxbits(k, d) for d in to_base(n, 1 << k)]
    return [from_base([r[i] for r in rows], 2) for i in range(k)]


def from_tuple(ns: list[int]) -> int:
    if not ns:
        raise EmptyTuple("cannot decode an empty tuple")
    k = len(ns)
    w = max_bitcount(ns)
    rows = [to_maxbits(w, x) for x in ns]
    return from_base([from_base([r[i] for r in rows], 2) for i in range(w)], 1 << k)


def ftuple2nat(ns: list[int]) -> int:
    """Sequence code: pair the length with the fused tuple, shifted by one."""
    if not ns:
        return 0
    return pepis_pair((len(ns) - 1, from_tuple(ns))) + 1


def nat2ftuple(n: int) -> list[int]:
    if n == 0:
        return []
    k, f = pepis_unpair(n - 1)
    return to_tuple(k + 1, f)


fun2 = encoder_via("fun2", Iso(ftuple2nat, nat2ftuple), nat)

hff2 = hylo("hff2", nat2ftuple, ftuple2nat)
