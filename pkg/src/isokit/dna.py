"""Base-4 symbolic codec for DNA base sequences, strand polarity, helices."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NonCanonical, ZeroP5x3
from .flat import nat
from .iso import Iso, encoder_via
from .numutil import from_base, to_base


class Base(enum.IntEnum):
    ADENINE = 0
    CYTOSINE = 1
    GUANINE = 2
    THYMINE = 3

    @property
    def letter(self) -> str:
        return "ACGT"[self.value]

    @classmethod
    def from_letter(cls, c: str) -> "Base":
        return cls("ACGT".index(c))


DNASeq = list[Base]


def nat2dna(n: int) -> DNASeq:
    """Base-4 digits of n read as bases, least significant first."""
    return [Base(d) for d in to_base(n, 4)]


def dna2nat(bs: DNASeq) -> int:
    if len(bs) > 1 and bs[-1] == Base.ADENINE:
        raise NonCanonical(f"trailing {Base.ADENINE.name} in {bs}")
    if not bs:
        raise NonCanonical("the empty sequence has no code; 0 is [ADENINE]")
    return from_base([int(b) for b in bs], 4)


dna = encoder_via("dna", Iso(dna2nat, nat2dna), nat)


_COMPLEMENT = {Base.ADENINE: Base.THYMINE, Base.THYMINE: Base.ADENINE,
               Base.CYTOSINE: Base.GUANINE, Base.GUANINE: Base.CYTOSINE}


def dna_complement(bs: DNASeq) -> DNASeq:
    return [_COMPLEMENT[b] for b in bs]


def dna_reverse(bs: DNASeq) -> DNASeq:
    return list(reversed(bs))


def dna_comprev(bs: DNASeq) -> DNASeq:
    return dna_complement(dna_reverse(bs))


class Polarity(enum.Enum):
    P3x5 = "3x5"
    P5x3 = "5x3"


@dataclass(frozen=True)
class DNAStrand:
    polarity: Polarity
    bases: tuple[Base, ...]


def strand2nat(s: DNAStrand) -> int:
    v = dna2nat(list(s.bases))
    if s.polarity is Polarity.P3x5:
        return 2 * v
    if v == 0:
        raise ZeroP5x3("value-0 strands carry 3'-5' polarity only")
    return 2 * v - 1


def nat2strand(n: int) -> DNAStrand:
    if n % 2 == 0:
        return DNAStrand(Polarity.P3x5, tuple(nat2dna(n // 2)))
    return DNAStrand(Polarity.P5x3, tuple(nat2dna((n + 1) // 2)))


dnaStrand = encoder_via("dnaStrand", Iso(strand2nat, nat2strand), nat)


def dna_up(bs: DNASeq) -> DNAStrand:
    return DNAStrand(Polarity.P5x3, tuple(bs))


def dna_down(bs: DNASeq) -> DNAStrand:
    return DNAStrand(Polarity.P3x5, tuple(dna_complement(bs)))


@dataclass(frozen=True)
class DoubleHelix:
    up: DNAStrand
    down: DNAStrand


def double_helix(bs: DNASeq) -> DoubleHelix:
    """Pair a sequence with its complement; the redundancy is the point."""
    return DoubleHelix(dna_up(bs), dna_down(bs))
