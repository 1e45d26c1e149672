"""Name-indexed registry wrapping every encoder for dynamic any-to-any routing.

Every conversion goes value -> root -> value, so routing by name behaves
identically to composing the static encoders.  ``hb:<k>`` names are a
parametric family: any base k >= 2 can be looked up, and two members are
pre-registered so the family is exercised by the self-test.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import bdds, codes, dna, flat, graphs, hbase, hereditary, pairing, perms
from .errors import UnknownEncoder
from .iso import Encoder
from .values import ValueKind, parse, render

FULL_SAMPLE = (1 << 50) - 1
# prime-position codecs decode by factoring and indexing into the prime
# stream; past ~2^20 that is no longer desk-scale, so their random
# roundtrips sample a documented smaller range
PMSET_SAMPLE = (1 << 20) - 1


@dataclass(frozen=True)
class Entry:
    """A registered encoder plus the value grammar it speaks."""

    encoder: Encoder
    kind: ValueKind
    sample_max: int = FULL_SAMPLE

    @property
    def name(self) -> str:
        return self.encoder.name

    def encode(self, value) -> list[int]:
        return self.encoder.encode(value)

    def decode(self, root: list[int]):
        return self.encoder.decode(root)

    def parse(self, text: str):
        return parse(self.kind, text)

    def render(self, value) -> str:
        return render(self.kind, value)


def _entries() -> dict[str, Entry]:
    k = ValueKind
    table = [
        Entry(flat.fun, k.NATSEQ),
        Entry(flat.mset, k.NATSEQ),
        Entry(flat.set_, k.NATSEQ),
        Entry(flat.nat, k.NAT),
        Entry(flat.pmset, k.NATSEQ, PMSET_SAMPLE),
        Entry(flat.bits, k.NATSEQ),
        Entry(flat.funbits, k.FUNBITS),
        Entry(flat.z, k.Z),
        Entry(flat.string, k.TEXT),
        Entry(flat.dyadic, k.RATIONAL),
        Entry(hereditary.hfs, k.HTREE),
        Entry(hereditary.hff, k.HTREE),
        Entry(hereditary.hffs, k.HTREE),
        Entry(hereditary.hfm, k.HTREE),
        Entry(hereditary.hfpm, k.HTREE, PMSET_SAMPLE),
        Entry(hereditary.uhfs, k.UTREE),
        Entry(hereditary.uhff, k.UTREE),
        Entry(hereditary.iuhfs, k.UTREE),
        Entry(hereditary.iuhff, k.UTREE),
        Entry(perms.perm, k.NATSEQ),
        Entry(perms.hfp, k.HTREE),
        Entry(hbase.hb(2), k.HBFOREST),
        Entry(hbase.hb(3), k.HBFOREST),
        Entry(pairing.nat2, k.NATPAIR),
        Entry(pairing.pnat2, k.NATPAIR),
        Entry(pairing.rpnat2, k.NATPAIR),
        Entry(pairing.set2, k.NATSEQ),
        Entry(pairing.mset2, k.NATPAIR),
        Entry(pairing.z2, k.ZPAIR),
        Entry(pairing.mz2, k.ZPAIR),
        Entry(pairing.clist, k.CLIST),
        Entry(pairing.bmset, k.NATSEQ),
        Entry(pairing.bmset2, k.NATSEQ),
        Entry(pairing.hfbm, k.HTREE),
        Entry(pairing.hfbm2, k.HTREE),
        Entry(pairing.fun2, k.NATSEQ),
        Entry(pairing.hff2, k.HTREE),
        Entry(bdds.bdd, k.BDD),
        Entry(bdds.pbdd, k.BDD),
        Entry(bdds.rbdd, k.BDD),
        Entry(graphs.digraph, k.NATPAIRSEQ),
        Entry(graphs.graph, k.NATSEQSEQ),
        Entry(graphs.mdigraph, k.NATPAIRSEQ),
        Entry(graphs.mgraph, k.NATSEQSEQ),
        Entry(graphs.hypergraph, k.NATSEQSEQ),
        Entry(graphs.sat, k.ZSEQSEQ),
        Entry(graphs.gmodel, k.GMODEL),
        Entry(codes.pars, k.PARENS),
        Entry(codes.hff_pars, k.NATSEQ),
        Entry(codes.elias, k.NATSEQ),
        Entry(codes.sfun, k.NATSEQ),
        Entry(dna.dna, k.DNA),
        Entry(dna.dnaStrand, k.DNASTRAND),
    ]
    return {e.name: e for e in table}


REGISTRY: dict[str, Entry] = _entries()


def names() -> list[str]:
    return sorted(REGISTRY)


def lookup(name: str) -> Entry:
    entry = REGISTRY.get(name)
    if entry is not None:
        return entry
    m = re.fullmatch(r"hb:(\d+)", name)
    if m:
        base = int(m.group(1))
        if base >= 2:
            return Entry(hbase.hb(base), ValueKind.HBFOREST)
    raise UnknownEncoder(f"no encoder named {name!r} "
                         f"(known: {', '.join(names())}, hb:<k>)")


def convert_text(src: str, dst: str, text: str) -> str:
    """Parse ``text`` in src's grammar, route through the root, render in dst's."""
    s, d = lookup(src), lookup(dst)
    return d.render(d.decode(s.encode(s.parse(text))))
