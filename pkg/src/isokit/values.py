"""Textual grammar for every value shape the registry can route.

``render(kind, value)`` and ``parse(kind, text)`` are exact inverses on
lawful values; the CLI is a thin wrapper over them.
"""
from __future__ import annotations

import enum
import json
import re
from fractions import Fraction

from .bdds import BDD, Decision, Leaf, MBranch, MLeaf, MTBDD
from .dna import Base, DNAStrand, Polarity
from .errors import ParseError
from .flat import FunBits
from .hbase import HB
from .hereditary import HTree, UAtom, UForest
from .pairing import Atom, Cons


class ValueKind(enum.Enum):
    NAT = "nat"
    NATSEQ = "natseq"
    NATSEQSEQ = "natseqseq"
    NATPAIR = "natpair"
    NATPAIRSEQ = "natpairseq"
    Z = "z"
    ZPAIR = "zpair"
    ZSEQSEQ = "zseqseq"
    RATIONAL = "rational"
    TEXT = "text"
    PARENS = "parens"
    HTREE = "htree"
    UTREE = "utree"
    FUNBITS = "funbits"
    HBFOREST = "hbforest"
    CLIST = "clist"
    BDD = "bdd"
    MTBDD = "mtbdd"
    DNA = "dna"
    DNASTRAND = "dnastrand"
    GMODEL = "gmodel"


# -- rendering --------------------------------------------------------------------

def render(kind: ValueKind, v) -> str:
    if kind is ValueKind.NAT or kind is ValueKind.Z:
        return str(v)
    if kind is ValueKind.NATSEQ:
        return "[" + ",".join(map(str, v)) + "]"
    if kind in (ValueKind.NATSEQSEQ, ValueKind.ZSEQSEQ):
        return "[" + ",".join("[" + ",".join(map(str, xs)) + "]" for xs in v) + "]"
    if kind in (ValueKind.NATPAIR, ValueKind.ZPAIR):
        return f"({v[0]},{v[1]})"
    if kind is ValueKind.NATPAIRSEQ:
        return "[" + ",".join(f"({a},{b})" for a, b in v) + "]"
    if kind is ValueKind.RATIONAL:
        q = Fraction(v)
        return f"{q.numerator}/{q.denominator}"
    if kind is ValueKind.TEXT:
        return json.dumps(v, ensure_ascii=False)
    if kind is ValueKind.PARENS:
        return v
    if kind in (ValueKind.HTREE, ValueKind.UTREE, ValueKind.CLIST,
                ValueKind.BDD, ValueKind.MTBDD):
        return repr(v)
    if kind is ValueKind.FUNBITS:
        return "".join("OI"[b] for b in v.chain) + "E"
    if kind is ValueKind.HBFOREST:
        return "[" + ",".join(map(repr, v)) + "]"
    if kind is ValueKind.DNA:
        return "".join(b.letter for b in v)
    if kind is ValueKind.DNASTRAND:
        return f"{v.polarity.value}:" + "".join(b.letter for b in v.bases)
    if kind is ValueKind.GMODEL:
        support, point = v
        return "([" + ",".join(map(str, support)) + f"],{point})"
    raise ParseError(f"unrenderable kind {kind}")


# -- parsing ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(-?\d+|[A-Za-z][A-Za-z0-9]*|[()\[\],/:])")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) if m else None

    def next(self) -> str:
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            raise ParseError(f"unexpected input at {self.text[self.pos:self.pos+12]!r}")
        self.pos = m.end()
        return m.group(1)

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def done(self) -> None:
        if self.text[self.pos:].strip():
            raise ParseError(f"trailing input {self.text[self.pos:]!r}")


def _int(lx: _Lexer, signed: bool) -> int:
    tok = lx.next()
    if not re.fullmatch(r"-?\d+", tok) or (tok.startswith("-") and not signed):
        raise ParseError(f"expected {'an integer' if signed else 'a natural'}, got {tok!r}")
    return int(tok)


def _seq(lx: _Lexer, item) -> list:
    lx.expect("[")
    out = []
    if lx.peek() == "]":
        lx.next()
        return out
    out.append(item(lx))
    while lx.peek() == ",":
        lx.next()
        out.append(item(lx))
    lx.expect("]")
    return out


def _pair(lx: _Lexer, signed: bool) -> tuple[int, int]:
    lx.expect("(")
    a = _int(lx, signed)
    lx.expect(",")
    b = _int(lx, signed)
    lx.expect(")")
    return (a, b)


def _htree(lx: _Lexer) -> HTree:
    lx.expect("H")
    return HTree(tuple(_seq(lx, _htree)))


def _utree(lx: _Lexer):
    tok = lx.next()
    if tok == "A":
        return UAtom(_int(lx, signed=False))
    if tok == "F":
        return UForest(tuple(_seq(lx, _utree)))
    raise ParseError(f"expected A or F, got {tok!r}")


def _hb(lx: _Lexer) -> HB:
    lx.expect("HB")
    coeff = _int(lx, signed=False)
    return HB(coeff, tuple(_seq(lx, _hb)))


def _clist(lx: _Lexer):
    tok = lx.next()
    if tok == "Atom":
        return Atom(_int(lx, signed=False))
    if tok == "Cons":
        lx.expect("(")
        h = _clist(lx)
        lx.expect(",")
        t = _clist(lx)
        lx.expect(")")
        return Cons(h, t)
    raise ParseError(f"expected Atom or Cons, got {tok!r}")


def _btree(lx: _Lexer):
    tok = lx.peek()
    if tok == "B0":
        lx.next()
        return Leaf(0)
    if tok == "B1":
        lx.next()
        return Leaf(1)
    lx.expect("(")
    lx.expect("D")
    var = _int(lx, signed=False)
    then = _btree(lx)
    els = _btree(lx)
    lx.expect(")")
    return Decision(var, then, els)


def _mtree(lx: _Lexer):
    lx.expect("(")
    tok = lx.next()
    if tok == "L":
        v = _int(lx, signed=False)
        lx.expect(")")
        return MLeaf(v)
    if tok == "M":
        var = _int(lx, signed=False)
        then = _mtree(lx)
        els = _mtree(lx)
        lx.expect(")")
        return MBranch(var, then, els)
    raise ParseError(f"expected L or M, got {tok!r}")


def parse(kind: ValueKind, text: str):
    try:
        return _parse(kind, text)
    except ParseError:
        raise
    except (ValueError, IndexError, KeyError) as exc:
        raise ParseError(str(exc)) from exc


def _parse(kind: ValueKind, text: str):
    text = text.strip()
    if kind is ValueKind.TEXT:
        try:
            v = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad string literal: {exc}") from exc
        if not isinstance(v, str):
            raise ParseError("expected a quoted string")
        return v
    if kind is ValueKind.PARENS:
        if not re.fullmatch(r"[()]*", text):
            raise ParseError("parenthesis values use only '(' and ')'")
        return text
    if kind is ValueKind.FUNBITS:
        if not re.fullmatch(r"[OI]*E", text):
            raise ParseError("funbits values look like IOOIE")
        return FunBits(tuple(1 if c == "I" else 0 for c in text[:-1]))
    if kind is ValueKind.DNA:
        if not re.fullmatch(r"[ACGT]+", text):
            raise ParseError("DNA sequences are nonempty words over ACGT")
        return [Base.from_letter(c) for c in text]
    if kind is ValueKind.DNASTRAND:
        m = re.fullmatch(r"(5x3|3x5):([ACGT]+)", text)
        if not m:
            raise ParseError("strands look like 5x3:ACGT or 3x5:ACGT")
        return DNAStrand(Polarity(m.group(1)),
                         tuple(Base.from_letter(c) for c in m.group(2)))

    lx = _Lexer(text)
    if kind is ValueKind.NAT:
        v = _int(lx, signed=False)
    elif kind is ValueKind.Z:
        v = _int(lx, signed=True)
    elif kind is ValueKind.NATSEQ:
        v = _seq(lx, lambda l: _int(l, signed=False))
    elif kind is ValueKind.NATSEQSEQ:
        v = _seq(lx, lambda l: _seq(l, lambda m: _int(m, signed=False)))
    elif kind is ValueKind.ZSEQSEQ:
        v = _seq(lx, lambda l: _seq(l, lambda m: _int(m, signed=True)))
    elif kind is ValueKind.NATPAIR:
        v = _pair(lx, signed=False)
    elif kind is ValueKind.ZPAIR:
        v = _pair(lx, signed=True)
    elif kind is ValueKind.NATPAIRSEQ:
        v = _seq(lx, lambda l: _pair(l, signed=False))
    elif kind is ValueKind.RATIONAL:
        num = _int(lx, signed=False)
        if lx.peek() == "/":
            lx.next()
            den = _int(lx, signed=False)
            v = Fraction(num, den)
        else:
            v = Fraction(num)
    elif kind is ValueKind.HTREE:
        v = _htree(lx)
    elif kind is ValueKind.UTREE:
        v = _utree(lx)
    elif kind is ValueKind.HBFOREST:
        v = tuple(_seq(lx, _hb))
    elif kind is ValueKind.CLIST:
        v = _clist(lx)
    elif kind is ValueKind.BDD:
        lx.expect("BDD")
        nvars = _int(lx, signed=False)
        v = BDD(nvars, _btree(lx))
    elif kind is ValueKind.MTBDD:
        lx.expect("MTBDD")
        mbits = _int(lx, signed=False)
        nvars = _int(lx, signed=False)
        v = MTBDD(mbits, nvars, _mtree(lx))
    elif kind is ValueKind.GMODEL:
        lx.expect("(")
        support = _seq(lx, lambda l: _int(l, signed=False))
        lx.expect(",")
        point = _int(lx, signed=False)
        lx.expect(")")
        v = (support, point)
    else:
        raise ParseError(f"unparseable kind {kind}")
    lx.done()
    return v
