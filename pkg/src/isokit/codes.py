"""Parenthesis codecs, Elias omega codes, self-delimited sequence codes, and
the sparseness / information-density analytics built on their code lengths."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import (TooLarge, TrailingInput, TruncatedCode, UnbalancedParens,
                     UnknownEncoder)
from .flat import fun2nat, nat, nat2fun, nat2mset, nat2pmset, nat2set
from .hereditary import HTree, hfm, hfpm, hfs, hff, rank, unrank
from .iso import Encoder, Iso, encoder_via
from .numutil import from_lbits, to_lbits
from .pairing import hfbm, hfbm2
from .perms import hfp, nat2perm


# -- parenthesis languages ----------------------------------------------------------

def tree2pars(t: HTree, lmark, rmark) -> list:
    out: list = []
    stack: list = [t]
    CLOSE = object()
    while stack:
        item = stack.pop()
        if item is CLOSE:
            out.append(rmark)
        else:
            out.append(lmark)
            stack.append(CLOSE)
            stack.extend(reversed(item.kids))
    return out


def pars2tree(seq: Sequence, lmark, rmark) -> HTree:
    stack: list[list[HTree]] = []
    root: HTree | None = None
    for c in seq:
        if root is not None:
            raise TrailingInput("input continues after the outer group closed")
        if c == lmark:
            stack.append([])
        elif c == rmark:
            if not stack:
                raise UnbalancedParens("close without a matching open")
            t = HTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(t)
            else:
                root = t
        else:
            raise UnbalancedParens(f"unexpected symbol {c!r}")
    if root is None:
        raise UnbalancedParens("no complete outer group")
    return root


def hff2pars(t: HTree) -> str:
    return "".join(tree2pars(t, "(", ")"))


def pars2hff(s: str) -> HTree:
    return pars2tree(s, "(", ")")


def hff2bitpars(t: HTree) -> list[int]:
    return tree2pars(t, 0, 1)


def bitpars2hff(bs: Sequence[int]) -> HTree:
    return pars2tree(bs, 0, 1)


pars = encoder_via("pars", Iso(pars2hff, hff2pars), hff)

pars_hf = Iso(bitpars2hff, hff2bitpars)

hff_pars = encoder_via("hff_pars", pars_hf, hff)
hfs_pars = encoder_via("hfs_pars", pars_hf, hfs)
hfm_pars = encoder_via("hfm_pars", pars_hf, hfm)
hfpm_pars = encoder_via("hfpm_pars", pars_hf, hfpm)
hfp_pars = encoder_via("hfp_pars", pars_hf, hfp)
hfbm_pars = encoder_via("hfbm_pars", pars_hf, hfbm)
hfbm2_pars = encoder_via("hfbm2_pars", pars_hf, hfbm2)


def nat2parnat(n: int) -> int:
    """Bijective-base-2 value of the paren bitstring of n; injective only."""
    from .flat import bits2nat

    return bits2nat(hff_pars.decode(nat.encode(n)))


def parnat2nat(n: int) -> int:
    from .flat import nat2bits

    return nat.decode(hff_pars.encode(nat2bits(n)))


# -- Elias omega --------------------------------------------------------------------

def to_elias(n: int) -> list[int]:
    """Omega code of n (shifted by one so 0 is codable), terminator included."""
    def chunks(m: int) -> list[int]:
        if m == 1:
            return []
        bs = to_lbits(m)
        l = len(bs) - 1
        return bs if l < 2 else chunks(l) + bs

    return chunks(n + 1) + [0]


def from_elias(bs: Sequence[int]) -> tuple[int, list[int]]:
    """Decode one codeword; returns (value, unconsumed suffix)."""
    bs = list(bs)
    n, i = 1, 0
    while True:
        if i >= len(bs):
            raise TruncatedCode("bit stream ended inside a codeword")
        if bs[i] == 0:
            return (n - 1, bs[i + 1:])
        hs = bs[i + 1: i + 1 + n]
        if len(hs) < n:
            raise TruncatedCode("bit stream ended inside a length block")
        i += 1 + n
        n = from_lbits([1] + hs)


def _elias_one(bs: Sequence[int]) -> int:
    n, rest = from_elias(bs)
    if rest:
        raise TrailingInput(f"{len(rest)} bits left after the codeword")
    return n


elias = encoder_via("elias", Iso(_elias_one, to_elias), nat)


# -- self-delimited sequences: length first, then each term ---------------------------

def nat2self(f: Callable[[int], list[int]], n: int) -> list[int]:
    ns = f(n)
    out = to_elias(len(ns))
    for x in ns:
        out += to_elias(x)
    return out


def self2nat(g: Callable[[list[int]], int], bs: Sequence[int]) -> tuple[int, list[int]]:
    l, rest = from_elias(bs)
    xs = []
    for _ in range(l):
        x, rest = from_elias(rest)
        xs.append(x)
    return (g(xs), rest)


def nat2sfun(n: int) -> list[int]:
    return nat2self(nat2fun, n)


def sfun2nat(bs: Sequence[int]) -> int:
    n, rest = self2nat(fun2nat, bs)
    if rest:
        raise TrailingInput(f"{len(rest)} bits left after the codeword")
    return n


sfun = encoder_via("sfun", Iso(sfun2nat, nat2sfun), nat)


# -- sparseness and information density -------------------------------------------------

_LINEAR: dict[str, Callable[[int], list[int]]] = {
    "fun": nat2fun,
    "mset": nat2mset,
    "set": nat2set,
    "pmset": nat2pmset,
    "perm": nat2perm,
}

_HEREDITARY: dict[str, Encoder] = {
    e.name: e for e in (hff_pars, hfs_pars, hfm_pars, hfpm_pars, hfp_pars,
                        hfbm_pars, hfbm2_pars)
}


def code_length(name: str, n: int) -> int:
    """Bit length of n's code under a linear or hereditary self-delimiting code."""
    if name in _LINEAR:
        return len(nat2self(_LINEAR[name], n))
    if name in _HEREDITARY:
        return len(_HEREDITARY[name].decode(nat.encode(n)))
    raise UnknownEncoder(f"no self-delimiting code named {name!r}")


def sparseness(metric: str, name: str, n: int) -> Fraction:
    """|elias code| / |structured code| as an exact rational."""
    if metric == "linear":
        if name not in _LINEAR:
            raise UnknownEncoder(f"linear sparseness expects one of "
                                 f"{sorted(_LINEAR)}, got {name!r}")
    elif metric == "hereditary":
        if name not in _HEREDITARY:
            raise UnknownEncoder(f"hereditary sparseness expects one of "
                                 f"{sorted(_HEREDITARY)}, got {name!r}")
    else:
        raise UnknownEncoder(f"unknown sparseness metric {metric!r}")
    return Fraction(len(to_elias(n)), code_length(name, n))


_DENSITY_FAMILIES: dict[str, Callable[[int], list[int]]] = {
    "hff": nat2fun,
    "hfs": nat2set,
}


def info_density(family: str, n: int) -> Fraction:
    """n*2^n over the total paren-code bitsize of [0..2^n-1], exactly."""
    split = _DENSITY_FAMILIES.get(family)
    if split is None:
        raise UnknownEncoder(f"density families are {sorted(_DENSITY_FAMILIES)}")
    if n > 14:
        raise TooLarge(f"density sum costs 2^n evaluations; {n} > 14")
    if n == 0:
        return Fraction(0)
    total = sum(2 * _treesize(split, k) for k in range(1 << n))
    return Fraction(n * (1 << n), total)


def _treesize(split, k: int) -> int:
    return rank(lambda xs: 1 + sum(xs), unrank(split, k))


def sparse_numbers(limit: int) -> list[int]:
    """Naturals below limit whose hff paren code beats their Elias code."""
    out = []
    for n in range(limit):
        if 2 * _treesize(nat2fun, n) < len(to_elias(n)):
            out.append(n)
    return out
