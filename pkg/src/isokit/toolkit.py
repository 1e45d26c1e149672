"""Generation, self-testing, size metrics and prime/pairing explorations.

The PRNG is pinned so results reproduce across platforms and runs: a
splitmix64 step.  ``rand(largest, seed)`` mixes ``seed + GAMMA`` once and
reduces modulo ``largest + 1``; streams advance the state by GAMMA per draw
and mix each state.  GAMMA = 0x9E3779B97F4A7C15, mixing constants
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, final xor-shift by 31.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .errors import NotPrime, ShapeMismatch
from .flat import nat
from .hereditary import HTree, tsize
from .iso import Encoder
from .numutil import is_prime, nth_prime, prime_index, primes
from .pairing import bitpair, bitunpair, mset_unpair, pepis_unpair
from .registry import REGISTRY, Entry, lookup

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def rand(largest: int, seed: int) -> int:
    """Deterministic draw in [0, largest] for the given seed."""
    return _mix((seed + _GAMMA) & _MASK) % (largest + 1)


def rand_stream(seed: int) -> Iterator[int]:
    """Deterministic stream of 64-bit values for the given seed."""
    state = seed & _MASK
    while True:
        state = (state + _GAMMA) & _MASK
        yield _mix(state)


def rannat(seed: int) -> int:
    return rand((1 << 50) - 1, seed)


# -- combinatorial generation ---------------------------------------------------------

def nth(enc: Encoder | str, n: int):
    """The n-th object of the encoder's domain: decode the code of n."""
    e = lookup(enc).encoder if isinstance(enc, str) else enc
    return e.decode(nat.encode(n))


def nths(enc: Encoder | str, ns: Iterable[int]) -> list:
    return [nth(enc, n) for n in ns]


def stream_of(enc: Encoder | str) -> Iterator:
    n = 0
    while True:
        yield nth(enc, n)
        n += 1


def random_gen(enc: Encoder | str, seed: int, largest: int, count: int) -> list:
    """count random objects, each decoded from a draw in [0, largest]."""
    draws = rand_stream(seed)
    return [nth(enc, next(draws) % (largest + 1)) for _ in range(count)]


def ran(enc: Encoder | str, seed: int, largest: int):
    return random_gen(enc, seed, largest, 1)[0]


# -- roundtrip self-test -----------------------------------------------------------------

def visit_as(enc: Encoder, n: int) -> int:
    """Route n through the encoder's domain and back to a natural."""
    return nat.decode(enc.encode(enc.decode(nat.encode(n))))


def rantest(enc: Encoder | str, largest: int = (1 << 50) - 1, seeds: int = 256) -> bool:
    """visit_as is the identity on pseudorandom samples drawn per seed."""
    e = lookup(enc).encoder if isinstance(enc, str) else enc
    for s in range(seeds):
        n = rand(largest, s)
        if visit_as(e, n) != n:
            return False
    return True


def isotest_report(seeds: int = 256) -> list[tuple[str, bool]]:
    """Per-encoder rantest over the whole registry, at each entry's sample bound."""
    out = []
    for name in sorted(REGISTRY):
        entry: Entry = REGISTRY[name]
        out.append((name, rantest(entry.encoder, entry.sample_max, seeds)))
    return out


def isotest(seeds: int = 256) -> bool:
    return all(ok for _, ok in isotest_report(seeds))


# -- size metrics --------------------------------------------------------------------------

def _decoded(enc: Encoder | str, n: int):
    return nth(enc, n)


def length_as(enc: Encoder | str, n: int) -> int:
    v = _decoded(enc, n)
    if not isinstance(v, (list, tuple, str)):
        raise ShapeMismatch(f"{v!r} has no length")
    return len(v)


def sum_as(enc: Encoder | str, n: int) -> int:
    v = _decoded(enc, n)
    if not isinstance(v, (list, tuple)) or not all(isinstance(x, int) for x in v):
        raise ShapeMismatch(f"{v!r} is not a sequence of naturals")
    return sum(v)


def size_as(enc: Encoder | str, n: int) -> int:
    v = _decoded(enc, n)
    if not isinstance(v, HTree):
        raise ShapeMismatch(f"{v!r} is not a tree")
    return tsize(v)


# -- primes meet unpairing -------------------------------------------------------------------

_UNPAIRERS: dict[str, Callable[[int], tuple[int, int]]] = {
    "bitunpair": bitunpair,
    "pepis_unpair": pepis_unpair,
    "mset_unpair": mset_unpair,
}


def uparts(unpair: Callable[[int], tuple[int, int]], n: int) -> list[int]:
    """Distinct values below the root in the recursive unpairing decomposition."""
    seen: set[int] = set()
    stack = list(unpair(n)) if n >= 2 else []
    while stack:
        v = stack.pop()
        if v >= 2 and v not in seen:
            seen.add(v)
            stack.extend(unpair(v))
    return sorted(seen)


def hyper_primes(unpair: Callable[[int], tuple[int, int]] | str) -> Iterator[int]:
    """Primes whose whole recursive unpairing decomposition is prime."""
    u = _UNPAIRERS[unpair] if isinstance(unpair, str) else unpair
    for p in primes():
        if all(is_prime(x) for x in uparts(u, p)):
            yield p


def take_hyper_primes(unpair, count: int) -> list[int]:
    out = []
    for p in hyper_primes(unpair):
        out.append(p)
        if len(out) == count:
            break
    return out


def ppair(pairf: Callable[[tuple[int, int]], int], pq: tuple[int, int]) -> int:
    """Transport a pairing function to the primes via their stream positions."""
    p, q = pq
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"ppair needs two primes, got {pq}")
    return nth_prime(pairf((prime_index(p), prime_index(q))))


def punpair(unpairf: Callable[[int], tuple[int, int]], p: int) -> tuple[int, int]:
    if not is_prime(p):
        raise NotPrime(f"punpair needs a prime, got {p}")
    a, b = unpairf(prime_index(p))
    return (nth_prime(a), nth_prime(b))
