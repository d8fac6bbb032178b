"""Integer factorization: trial division, Miller-Rabin, Pollard-Brent rho."""
from __future__ import annotations

import math
import random

TRIAL_LIMIT = 10**6

# Deterministic for every n < 3.3e24 (first thirteen primes as bases).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_probable_prime(n: int, extra_rounds: int = 16) -> bool:
    """Miller-Rabin test.

    Exact below about 3.3e24; above that ``extra_rounds`` random bases are
    added and a composite slips through with probability under 4**-rounds.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC_BOUND:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(extra_rounds)]
    return not any(witness(a) for a in bases)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite ``n``."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as sorted ``(prime, exponent)`` pairs.

    ``factorize(1) == []``.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
    d = 5
    while d <= TRIAL_LIMIT and d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        d += 6
    stack = [n] if n > 1 else []
    while stack:
        k = stack.pop()
        if is_probable_prime(k):
            factors[k] = factors.get(k, 0) + 1
        else:
            f = _pollard_brent(k)
            stack += [f, k // f]
    return sorted(factors.items())
