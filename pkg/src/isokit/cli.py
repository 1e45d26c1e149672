"""Command-line front end: convert, generate, analyze, goodstein, minbdd,
dot, selftest.  Results go to stdout, diagnostics to stderr; exit code 1
means the input text did not parse, 2 means a domain error or guard breach.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bdds import robdd_size, to_min_bdd
from .codes import info_density, sparse_numbers, sparseness
from .errors import CodecError, ParseError, TooLarge
from .graphs import dot_emit
from .hbase import goodstein
from .msetarith import mgcd, mlcm, mdiv, mprod, mprod1, pmprod, pmprod_closed
from .iso import borrow_from, borrow_from_steps
from .pairing import pairing_identities
from .registry import REGISTRY, lookup
from .toolkit import (isotest_report, length_as, nth, random_gen, size_as,
                      sum_as, take_hyper_primes)
from .values import render, ValueKind


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isokit",
                                description="any-to-any bijective data type conversions")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="re-express a value in another encoder's domain")
    c.add_argument("--from", dest="src", required=True, metavar="NAME")
    c.add_argument("--to", dest="dst", required=True, metavar="NAME")
    c.add_argument("value", help="value written in the --from grammar")

    g = sub.add_parser("generate", help="enumerate or sample objects")
    gsub = g.add_subparsers(dest="mode", required=True)
    gn = gsub.add_parser("nth")
    gn.add_argument("enc")
    gn.add_argument("n", type=int)
    gs = gsub.add_parser("stream")
    gs.add_argument("enc")
    gs.add_argument("--count", type=int, required=True)
    gr = gsub.add_parser("random")
    gr.add_argument("enc")
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("--max", type=int, default=(1 << 50) - 1)
    gr.add_argument("--count", type=int, default=1)

    a = sub.add_parser("analyze", help="experimental-mathematics sweeps")
    asub = a.add_subparsers(dest="kind", required=True)
    az = asub.add_parser("sizes")
    az.add_argument("--enc", required=True)
    az.add_argument("--metric", choices=["length", "sum", "size"], required=True)
    az.add_argument("--max", type=int, required=True)
    ps = asub.add_parser("sparseness")
    ps.add_argument("--metric", choices=["linear", "hereditary"], required=True)
    ps.add_argument("--enc", required=True)
    ps.add_argument("--max", type=int, required=True)
    de = asub.add_parser("density")
    de.add_argument("--family", choices=["hff", "hfs"], required=True)
    de.add_argument("--n", type=int, required=True)
    sn = asub.add_parser("sparse-numbers")
    sn.add_argument("--max", type=int, required=True)
    hp = asub.add_parser("hyper-primes")
    hp.add_argument("--fn", choices=["bitunpair", "pepis_unpair", "mset_unpair"],
                    required=True)
    hp.add_argument("--count", type=int, required=True)
    asub.add_parser("identities")

    go = sub.add_parser("goodstein", help="prefix of a Goodstein sequence")
    go.add_argument("n", type=int)
    go.add_argument("--count", type=int, default=32)

    mb = sub.add_parser("minbdd", help="minimal reduced BDD over all variable orders")
    mb.add_argument("nvars", type=int)
    mb.add_argument("tt", type=int)

    d = sub.add_parser("dot", help="DOT text of a decomposition")
    d.add_argument("--kind", choices=["unfold", "unpair", "untuple", "pairs"],
                   required=True)
    d.add_argument("--fn")
    d.add_argument("--enc")
    d.add_argument("-k", type=int)
    d.add_argument("n", type=int)

    sub.add_parser("selftest", help="roundtrip every registered encoder")
    return p


def _csv(rows) -> str:
    lines = ["n,value"]
    lines += [f"{n},{v}" for n, v in rows]
    return "\n".join(lines) + "\n"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _run(args) -> int:
    out = sys.stdout
    if args.command == "convert":
        src, dst = lookup(args.src), lookup(args.dst)
        value = src.parse(args.value)
        out.write(dst.render(dst.decode(src.encode(value))) + "\n")
    elif args.command == "generate":
        entry = lookup(args.enc)
        if args.mode == "nth":
            out.write(entry.render(nth(entry.encoder, args.n)) + "\n")
        elif args.mode == "stream":
            for i in range(args.count):
                out.write(entry.render(nth(entry.encoder, i)) + "\n")
        else:
            for v in random_gen(entry.encoder, args.seed, args.max, args.count):
                out.write(entry.render(v) + "\n")
    elif args.command == "analyze":
        _analyze(args, out)
    elif args.command == "goodstein":
        out.write(" ".join(map(str, goodstein(args.n, args.count))) + "\n")
    elif args.command == "minbdd":
        b = to_min_bdd(args.nvars, args.tt)
        out.write(render(ValueKind.BDD, b) + "\n")
        out.write(f"robdd_size {robdd_size(b)}\n")
    elif args.command == "dot":
        out.write(dot_emit(args.kind, args.n, fn=args.fn, k=args.k, enc=args.enc))
    elif args.command == "selftest":
        report = isotest_report()
        for name, ok in report:
            bound = REGISTRY[name].sample_max
            out.write(f"{'ok' if ok else 'FAIL'} {name} (samples <= {bound})\n")
        good = sum(ok for _, ok in report)
        out.write(f"{'OK' if good == len(report) else 'FAILED'}: "
                  f"{good}/{len(report)} encoders\n")
        return 0 if good == len(report) else 2
    return 0


def _analyze(args, out) -> None:
    if args.kind == "sizes":
        metric = {"length": length_as, "sum": sum_as, "size": size_as}[args.metric]
        enc = lookup(args.enc).encoder
        out.write(_csv((n, metric(enc, n)) for n in range(args.max + 1)))
    elif args.kind == "sparseness":
        out.write(_csv((n, _frac(sparseness(args.metric, args.enc, n)))
                       for n in range(args.max + 1)))
    elif args.kind == "density":
        if args.n > 14:
            raise TooLarge(f"density guarded to n <= 14, got {args.n}")
        out.write(_csv((n, _frac(info_density(args.family, n)))
                       for n in range(args.n + 1)))
    elif args.kind == "sparse-numbers":
        for n in sparse_numbers(args.max):
            out.write(f"{n}\n")
    elif args.kind == "hyper-primes":
        for p in take_hyper_primes(args.fn, args.count):
            out.write(f"{p}\n")
    elif args.kind == "identities":
        checks = pairing_identities()
        for name, ok in checks:
            out.write(f"{'ok' if ok else 'FAIL'} {name}\n")
        if all(ok for _, ok in checks):
            out.write("all identities hold\n")
        else:
            raise CodecError("identity sweep found a failure")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
