"""isokit: bijective codecs between data types through sequences of naturals.

Every encoder is an isomorphism between some domain and the root
representation ``list[int]``; any two encoders convert between their domains
by routing through the root.  ``registry.lookup`` resolves encoders by name,
``toolkit`` provides generation and self-testing, and the ``isokit`` CLI
wraps it all.
"""

from .iso import (Encoder, Iso, borrow, borrow2, borrow_from,
                  borrow_from_steps, compose, convert, encoder, fit, invert,
                  itself, lend, lend2, retrofit, route)
from .registry import REGISTRY, lookup, names
from .toolkit import isotest, nth, random_gen, rantest, stream_of

__all__ = [
    "Encoder", "Iso", "borrow", "borrow2", "borrow_from", "borrow_from_steps",
    "compose", "convert", "encoder", "fit", "invert", "itself", "lend",
    "lend2", "retrofit", "route",
    "REGISTRY", "lookup", "names",
    "isotest", "nth", "random_gen", "rantest", "stream_of",
]
