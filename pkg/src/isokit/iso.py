"""The isomorphism groupoid and the combinators that transport operations.

An ``Iso`` packages a bijection with its inverse.  An ``Encoder`` is an Iso
whose far side is the shared root representation: finite sequences of
arbitrary-precision naturals (plain Python ``list[int]``).  Any two encoders
can then be routed through the root to convert values between their domains,
or to borrow operations from one domain into the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class Iso:
    """A bijection ``fwd`` together with its inverse ``bwd``.

    For every lawful x: ``bwd(fwd(x)) == x`` and ``fwd(bwd(y)) == y``.
    """

    fwd: Callable[[Any], Any]
    bwd: Callable[[Any], Any]


def compose(f: Iso, g: Iso) -> Iso:
    return Iso(lambda x: g.fwd(f.fwd(x)), lambda y: f.bwd(g.bwd(y)))


def invert(f: Iso) -> Iso:
    return Iso(f.bwd, f.fwd)


itself = Iso(lambda x: x, lambda x: x)


@dataclass(frozen=True)
class Encoder:
    """A named isomorphism between some domain and the root ``list[int]``."""

    name: str
    iso: Iso

    def encode(self, value):
        """Domain value -> root sequence."""
        return self.iso.fwd(value)

    def decode(self, root):
        """Root sequence -> domain value."""
        return self.iso.bwd(root)


def encoder(name: str, fwd: Callable, bwd: Callable) -> Encoder:
    return Encoder(name, Iso(fwd, bwd))


def encoder_via(name: str, pre: Iso, base: Encoder) -> Encoder:
    """Encoder whose domain first maps through ``pre`` into ``base``'s domain."""
    return Encoder(name, compose(pre, base.iso))


def route(this: Encoder, that: Encoder) -> Iso:
    """Iso from ``this``'s domain to ``that``'s domain, hubbed through the root."""
    return compose(this.iso, invert(that.iso))


def convert(target: Encoder, source: Encoder, value):
    """Value given in ``source``'s domain, re-expressed in ``target``'s domain."""
    return target.decode(source.encode(value))


# -- transport combinators -----------------------------------------------------

def borrow(iso: Iso, op: Callable, x):
    return iso.fwd(op(iso.bwd(x)))


def borrow2(iso: Iso, op: Callable, x, y):
    return iso.fwd(op(iso.bwd(x), iso.bwd(y)))


def borrow_n(iso: Iso, op: Callable, xs):
    return iso.fwd(op([iso.bwd(x) for x in xs]))


def lend(iso: Iso, op: Callable, x):
    return borrow(invert(iso), op, x)


def lend2(iso: Iso, op: Callable, x, y):
    return borrow2(invert(iso), op, x, y)


def lend_n(iso: Iso, op: Callable, xs):
    return borrow_n(invert(iso), op, xs)


def fit(op: Callable, iso: Iso, x):
    """Transport x through the iso, then apply an operation on the far side."""
    return op(iso.fwd(x))


def retrofit(op: Callable, iso: Iso, x):
    return op(iso.bwd(x))


def borrow_from(other: Encoder, op: Callable, this: Encoder, x, y):
    """Binary op from ``other``'s domain applied to values of ``this``'s domain."""
    return borrow2(route(other, this), op, x, y)


def borrow_from_steps(other: Encoder, op: Callable, this: Encoder, x, y):
    """Same as borrow_from, spelled out as four conversions (for testing)."""
    a = convert(other, this, x)
    b = convert(other, this, y)
    c = op(a, b)
    return convert(this, other, c)
