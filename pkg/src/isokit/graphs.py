"""Graph-shaped encoders and DOT text emission.

Directed graphs fuse their edge pairs into set codes; multigraph variants
route through plain sequences so duplicates and order survive.  Hypergraphs
are sets of sets, SAT problems are sets of clauses of signed literals, and a
graph model is a support set together with a distinguished point.

Vertices are the numbers that occur in edges, so graphs with isolated
vertices have no code here; that is a property of the representation.
"""
from __future__ import annotations

from typing import Callable

from .errors import DuplicateEdge, UnknownKind, ZeroLiteral
from .flat import (fun, fun2nat, fun2set, nat, nat2fun, nat2mset, nat2pmset,
                   nat2set, nat2z, set_, set2fun, set2nat, z2nat)
from .iso import Iso, encoder_via
from .pairing import (bitpair, bitunpair, mset_unpair, pepis_unpair,
                      to_tuple, unord_pair, unord_unpair)
from .perms import nat2perm


def digraph2set(ps: list[tuple[int, int]]) -> list[int]:
    return [bitpair(tuple(p)) for p in ps]


def set2digraph(ns: list[int]) -> list[tuple[int, int]]:
    return [bitunpair(n) for n in ns]


def _distinct_codes(ns: list[int]) -> list[int]:
    if len(set(ns)) != len(ns):
        raise DuplicateEdge(f"duplicate edges in {ns}")
    return ns


digraph = encoder_via(
    "digraph", Iso(lambda ps: _distinct_codes(digraph2set(ps)), set2digraph), set_)
mdigraph = encoder_via("mdigraph", Iso(digraph2set, set2digraph), fun)


def graph2set(ps: list[list[int]]) -> list[int]:
    return [unord_pair(list(p)) for p in ps]


def set2graph(ns: list[int]) -> list[list[int]]:
    return [unord_unpair(n) for n in ns]


graph = encoder_via(
    "graph", Iso(lambda ps: _distinct_codes(graph2set(ps)), set2graph), set_)
mgraph = encoder_via("mgraph", Iso(graph2set, set2graph), fun)


hypergraph = encoder_via(
    "hypergraph",
    Iso(lambda ess: _distinct_codes([set2nat(es) for es in ess]),
        lambda ns: [nat2set(n) for n in ns]),
    set_,
)


# -- SAT: clauses of nonzero signed literals ----------------------------------------

def _literal_encode(lit: int) -> int:
    if lit == 0:
        raise ZeroLiteral("0 is not a propositional literal")
    z = lit if lit < 0 else lit - 1  # undo the shift away from zero
    return z2nat(z)


def _literal_decode(n: int) -> int:
    z = nat2z(n)
    return z if z < 0 else z + 1


def sat2set(clauses: list[list[int]]) -> list[int]:
    return _distinct_codes([set2nat([_literal_encode(l) for l in c]) for c in clauses])


def set2sat(ns: list[int]) -> list[list[int]]:
    return [[_literal_decode(e) for e in nat2set(n)] for n in ns]


sat = encoder_via("sat", Iso(sat2set, set2sat), set_)


# -- graph models: (support set, point) ----------------------------------------------

def gmodel2nat(sm: tuple[list[int], int]) -> int:
    support, point = sm
    return fun2nat([point] + set2fun(list(support))) - 1


def nat2gmodel(n: int) -> tuple[list[int], int]:
    point, *xs = nat2fun(n + 1)
    return (fun2set(xs), point)


gmodel = encoder_via("gmodel", Iso(gmodel2nat, nat2gmodel), nat)


# -- DOT emission ----------------------------------------------------------------------

_UNFOLD_TRANSFORMERS: dict[str, Callable[[int], list[int]]] = {
    "fun": nat2fun,
    "set": nat2set,
    "mset": nat2mset,
    "pmset": nat2pmset,
    "perm": nat2perm,
}

_UNPAIRERS: dict[str, Callable[[int], tuple[int, int]]] = {
    "bitunpair": bitunpair,
    "pepis_unpair": pepis_unpair,
    "mset_unpair": mset_unpair,
}


def _nub(triples: list[tuple]) -> list[tuple]:
    seen, out = set(), []
    for t in triples:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def unfold_edges(split: Callable[[int], list[int]], n: int) -> list[tuple[int, int, int]]:
    """Labelled edges (parent, child, position) of the hereditary unfolding."""
    def walk(v: int) -> list[tuple[int, int, int]]:
        ps = [(v, c, i) for i, c in enumerate(split(v))]
        out = list(ps)
        for _, c, _ in ps:
            out.extend(walk(c))
        return out

    return _nub(walk(n))


def unpairing_edges(unpair: Callable[[int], tuple[int, int]], n: int) -> list[tuple[int, int, int]]:
    """Edges of the binary decomposition tree of an unpairing function."""
    def walk(v: int) -> list[tuple[int, int, int]]:
        if v < 2:
            return []
        a, b = unpair(v)
        return [(v, a, 0), (v, b, 1)] + walk(a) + walk(b)

    return _nub(walk(n))


def untupling_edges(k: int, n: int) -> list[tuple[int, int, int]]:
    """Edges of the k-way decomposition tree of the tuple code."""
    def walk(v: int) -> list[tuple[int, int, int]]:
        if v < 2:
            return []
        ns = to_tuple(k, v)
        out = [(v, c, i) for i, c in enumerate(ns)]
        for c in ns:
            out.extend(walk(c))
        return out

    return _nub(walk(n))


def _dot_text(edges: list[tuple[int, int, int]], labeled: bool = True) -> str:
    vertices = sorted({v for a, b, _ in edges for v in (a, b)})
    lines = ["digraph iso {"]
    for v in vertices:
        lines.append(f"  {v};")
    for a, b, i in edges:
        if labeled:
            lines.append(f"  {a} -> {b} [label={i}];")
        else:
            lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_emit(kind: str, n: int, fn: str | None = None, k: int | None = None,
             enc: str | None = None) -> str:
    """Deterministic DOT text for the requested decomposition of n."""
    if kind == "unfold":
        split = _UNFOLD_TRANSFORMERS.get(fn or "")
        if split is None:
            raise UnknownKind(f"unfold transformer must be one of "
                              f"{sorted(_UNFOLD_TRANSFORMERS)}, got {fn!r}")
        return _dot_text(unfold_edges(split, n))
    if kind == "unpair":
        unpair = _UNPAIRERS.get(fn or "")
        if unpair is None:
            raise UnknownKind(f"unpairing function must be one of "
                              f"{sorted(_UNPAIRERS)}, got {fn!r}")
        return _dot_text(unpairing_edges(unpair, n))
    if kind == "untuple":
        if not k or k < 1:
            raise UnknownKind("untuple needs a tuple width k >= 1")
        return _dot_text(untupling_edges(k, n))
    if kind == "pairs":
        if enc == "digraph":
            edges = set2digraph(nat2set(n))
        elif enc == "mdigraph":
            edges = set2digraph(nat2fun(n))
        else:
            raise UnknownKind(f"pairs expects digraph or mdigraph, got {enc!r}")
        return _dot_text([(a, b, i) for i, (a, b) in enumerate(edges)], labeled=False)
    raise UnknownKind(f"unknown dot kind {kind!r}")
