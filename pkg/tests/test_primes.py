from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qyt.primes import factorize, is_probable_prime


def trial_factor(n):
    out, d = [], 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def test_small_primality_matches_sieve():
    sieve = [True] * 5000
    sieve[0] = sieve[1] = False
    for i in range(2, 5000):
        if sieve[i]:
            for j in range(i * i, 5000, i):
                sieve[j] = False
    assert [is_probable_prime(n) for n in range(5000)] == sieve


@pytest.mark.parametrize("n", [561, 1105, 2821, 3215031751, 3825123056546413051])
def test_strong_pseudoprimes_rejected(n):
    assert not is_probable_prime(n)


@pytest.mark.parametrize("n", [113, 241, 2**61 - 1, 2**89 - 1, 10**30 + 57])
def test_known_primes(n):
    assert is_probable_prime(n)


def test_factorize_edges():
    assert factorize(1) == []
    assert factorize(2) == [(2, 1)]
    assert factorize(113) == [(113, 1)]
    assert factorize(2**10 * 3**4) == [(2, 10), (3, 4)]
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q) == [(p, 1), (q, 1)]
    big = (2**61 - 1) * 1_000_000_007
    assert factorize(big) == [(1_000_000_007, 1), (2**61 - 1, 1)]


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_matches_trial_division(n):
    assert factorize(n) == trial_factor(n)


@given(st.lists(st.integers(min_value=2, max_value=10**7), min_size=1, max_size=4))
def test_factorize_products(xs):
    n = prod(xs)
    fs = factorize(n)
    assert prod(p ** e for p, e in fs) == n
    assert all(is_probable_prime(p) for p, _ in fs)
    assert [p for p, _ in fs] == sorted({p for p, _ in fs})
