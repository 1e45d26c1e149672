"""Base conversion, bit metrics, primes and multiset operations."""
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isokit.errors import (BaseTooSmall, InvalidDigit, NotFactorable,
                           NotPrime, UnsortedInput)
from isokit.numutil import (bitcount, factorize, first_primes, from_base,
                            from_lbits, is_prime, max_bitcount, mset_dif,
                            mset_inter, mset_symdif, mset_union, nth_prime,
                            prime_index, to_base, to_lbits, to_maxbits)


def test_base_digit_fixtures():
    assert to_base(42, 2) == [0, 1, 0, 1, 0, 1]
    assert to_base(0, 2) == [0]
    assert to_base(0, 16) == [0]
    # direct evaluation: 2 + 1*4
    assert from_base([2, 1], 4) == 6


def test_base_roundtrip():
    for base in (2, 3, 4, 16):
        for n in range(10_000):
            assert from_base(to_base(n, base), base) == n


def test_base_errors():
    with pytest.raises(BaseTooSmall):
        to_base(5, 1)
    with pytest.raises(InvalidDigit):
        from_base([4], 4)
    with pytest.raises(InvalidDigit):
        from_base([-1], 4)


def test_lbits():
    assert to_lbits(43) == [1, 0, 1, 0, 1, 1]
    assert from_lbits([1, 0, 1, 0, 1, 1]) == 43


def test_bit_metrics():
    assert bitcount(0) == 1
    assert bitcount(42) == 6  # 2^6 = 64 > 42 >= 2^5
    assert max_bitcount([]) == 0
    assert max_bitcount([0, 3, 42]) == 6
    assert to_maxbits(3, 2) == [0, 1, 0]
    for n in range(1, 300):
        assert 2 ** bitcount(n) > n >= 2 ** (bitcount(n) - 1)


def test_prime_stream_against_trial_division():
    def trial_primes(count):
        out, c = [], 2
        while len(out) < count:
            if all(c % p for p in out):
                out.append(c)
            c += 1
        return out

    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert first_primes(200) == trial_primes(200)


def test_factorize_oracle():
    assert factorize(2009) == [7, 7, 41]
    for n in range(2, 10_000):
        fs = factorize(n)
        assert fs == sorted(fs)
        prod = 1
        for f in fs:
            prod *= f
        assert prod == n
    with pytest.raises(NotFactorable):
        factorize(1)


def test_is_prime_matches_trial_division():
    for n in range(10_000):
        assert is_prime(n) == (n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1)))


def test_prime_index():
    # count primes strictly below 41: 2,3,5,...,37 -> 12
    assert prime_index(41) == 12
    assert nth_prime(12) == 41
    for i in range(100):
        assert prime_index(nth_prime(i)) == i
    with pytest.raises(NotPrime):
        prime_index(42)


def test_mset_op_fixtures():
    assert mset_inter([1, 2, 2, 3], [2, 2, 4]) == [2, 2]
    assert mset_dif([1, 2, 2, 3], []) == [1, 2, 2, 3]
    # the dif ++ inter ++ dif formula is multiplicity max, so [1] not [1,1]
    assert mset_union([1], [1]) == [1]
    with pytest.raises(UnsortedInput):
        mset_inter([2, 1], [1])


small_msets = st.lists(st.integers(min_value=0, max_value=4), max_size=4).map(sorted)


@given(small_msets, small_msets)
def test_mset_ops_against_counting_oracle(xs, ys):
    cx, cy = Counter(xs), Counter(ys)
    keys = sorted(set(cx) | set(cy))
    inter = [k for k in keys for _ in range(min(cx[k], cy[k]))]
    dif = [k for k in keys for _ in range(max(cx[k] - cy[k], 0))]
    union = [k for k in keys for _ in range(max(cx[k], cy[k]))]
    symdif = sorted([k for k in keys for _ in range(abs(cx[k] - cy[k]))])
    assert mset_inter(xs, ys) == inter
    assert mset_dif(xs, ys) == dif
    assert mset_union(xs, ys) == union
    assert mset_symdif(xs, ys) == symdif
    assert len(mset_union(xs, ys)) == len(xs) + len(ys) - len(mset_inter(xs, ys))
