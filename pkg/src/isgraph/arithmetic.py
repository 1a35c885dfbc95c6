"""Integer arithmetic: factorization, prime-power shapes, Suzuki orders, Catalan pairs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotOddPowerOfTwo, OutOfRange

MAX_FACTOR_INPUT = 10**12
TRIAL_BOUND = 10**6
# fixed bases make Miller-Rabin deterministic far beyond 10**12
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimeFactorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@lru_cache(maxsize=None)
def _primes_upto(bound: int) -> np.ndarray:
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).astype(np.int64)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Return a non-trivial factor of the composite ``n``; seeds are fixed."""
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 64, 1, 1, 1
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
    raise ArithmeticError(f"rho failed to split {n}")


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factorize(n: int, trial_bound: int = TRIAL_BOUND) -> PrimeFactorization:
    """Factor ``2 <= n <= 10**12``: trial division by primes up to
    ``trial_bound``, then Brent's rho on whatever cofactor remains."""
    if not isinstance(n, (int, np.integer)) or n < 1 or n > MAX_FACTOR_INPUT:
        raise OutOfRange(f"factorize expects 1 <= n <= {MAX_FACTOR_INPUT}, got {n}")
    n = int(n)
    out: dict[int, int] = {}
    m = n
    limit = min(trial_bound, math.isqrt(m))
    primes = _primes_upto(max(trial_bound, 2))
    primes = primes[primes <= limit]
    if m > 1 and primes.size:
        for p in primes[(m % primes) == 0].tolist():
            while m % p == 0:
                m //= p
                out[p] = out.get(p, 0) + 1
    if m > 1:
        if math.isqrt(m) <= limit:
            # every prime <= sqrt(m) has been tried
            out[m] = out.get(m, 0) + 1
        else:
            _split_large(m, out)
    return PrimeFactorization(n, tuple(sorted(out.items())))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    f = factorize(n).factors
    return f[0] if len(f) == 1 else None


def is_two_prime_form(n: int) -> tuple[tuple[int, int], tuple[int, int]] | None:
    if n < 2:
        return None
    f = factorize(n).factors
    return (f[0], f[1]) if len(f) == 2 else None


def classify_value(n: int) -> dict:
    f = factorize(n)
    if len(f.factors) == 1:
        p, a = f.factors[0]
        kind = "prime" if a == 1 else "prime_power"
    elif len(f.factors) == 2:
        kind = "two_prime"
    else:
        kind = "other"
    return {
        "value": n,
        "kind": kind,
        "factors": [list(pe) for pe in f.factors],
        "passes": kind != "other",
    }


def suzuki_exponent(q: int) -> int:
    """Return ``e >= 1`` with ``q == 2**(2e+1)``; raise otherwise."""
    if not isinstance(q, int) or q < 8 or q & (q - 1):
        raise NotOddPowerOfTwo(f"q={q} is not 2^(2e+1) with e >= 1")
    k = q.bit_length() - 1
    if k % 2 == 0:
        raise NotOddPowerOfTwo(f"q={q} = 2^{k} has even exponent")
    return (k - 1) // 2


def suzuki_cograph_condition(q: int) -> dict:
    e = suzuki_exponent(q)
    root = 2 ** (e + 1)  # exact sqrt(2q)
    values = (q - 1, q - root + 1, q + root + 1)
    classes = [classify_value(v) for v in values]
    return {
        "q": q,
        "e": e,
        "sqrt_2q": root,
        "values": list(values),
        "classification": classes,
        "condition": all(c["passes"] for c in classes),
        "q_eq_8_flag": q == 8,
    }


def catalan_solutions(limit: int) -> list[tuple[int, int, int, int]]:
    """All ``(x, a, y, b)`` with ``x**a - y**b == 1``, ``a, b > 1``,
    ``x, y >= 2`` and ``x**a <= limit``."""
    if not isinstance(limit, int) or limit < 0 or limit > 10**6:
        raise OutOfRange(f"catalan limit must be in [0, 10**6], got {limit}")
    powers: dict[int, list[tuple[int, int]]] = {}
    base = 2
    while base * base <= limit:
        v, a = base * base, 2
        while v <= limit:
            powers.setdefault(v, []).append((base, a))
            v *= base
            a += 1
        base += 1
    out = []
    for v in sorted(powers):
        for x, a in powers[v]:
            for y, b in powers.get(v - 1, ()):
                out.append((x, a, y, b))
    return out
