"""Exact integer arithmetic: primality, factorization, and the classical
multiplicative counting functions (omega, big_omega, tau) plus prime counts.

Everything here is deterministic and exact for inputs up to 2**63; nothing
uses floating point except the seed of the integer nth-root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24
# (Sinclair's seven bases), so in particular for the full 63-bit range.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Inputs below this are factored entirely by wheel trial division; above it
# the trial pass only strips small factors and Brent's rho splits the rest.
_TRIAL_LIMIT = 10**6

# Increments of the mod-30 wheel starting at 7: skips multiples of 2, 3, 5.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**63."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeModulus(int):
    """An integer certified prime at construction; composites are rejected."""

    __slots__ = ()

    def __new__(cls, p: int) -> "PrimeModulus":
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"not a prime: {p}")
        return super().__new__(cls, p)


def as_prime(p: int) -> PrimeModulus:
    """Coerce to PrimeModulus, skipping re-certification when already one."""
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def _sieve_flags(limit: int) -> bytearray:
    """flags[i] == 1 iff i is prime, for 0 <= i <= limit."""
    if limit < 0:
        return bytearray()
    flags = bytearray([1]) * (limit + 1)
    flags[: min(2, limit + 1)] = b"\x00" * min(2, limit + 1)
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, limit + 1, i))
    return flags


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval [lo, hi], ascending.

    Uses a segmented sieve so large lo with a narrow window stays cheap.
    """
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    lo = max(lo, 2)
    if hi < 2:
        return []
    root = math.isqrt(hi)
    base_flags = _sieve_flags(root)
    seg = bytearray([1]) * (hi - lo + 1)
    for p in range(2, root + 1):
        if not base_flags[p]:
            continue
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            seg[start - lo :: p] = b"\x00" * ((hi - start) // p + 1)
    return [lo + i for i, f in enumerate(seg) if f]


def prime_count_odd(x: int) -> int:
    """#{p prime : 3 <= p <= x}; excludes 2 by definition, 0 when x < 3."""
    if x < 3:
        return 0
    return len(primes_in(3, x))


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization: primes strictly ascending, exponents >= 1.

    n == 1 carries an empty factor list.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def reassemble(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _brent_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n, via Brent's cycle method.

    The polynomial constant walks a fixed sequence, so the result is
    deterministic for a given n.
    """
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
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
    raise ArithmeticError(f"factor split failed for {n}")


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    g = _brent_rho(n)
    _factor_into(g, acc)
    _factor_into(n // g, acc)


def factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1.

    Trial division with a mod-30 wheel handles everything below 10**6
    outright; larger cofactors go to a deterministic rho splitter.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    orig = n
    acc: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            acc[p] = acc.get(p, 0) + 1
            n //= p
    d = 7
    i = 0
    trial_cap = n if n < _TRIAL_LIMIT else 10**3
    while d * d <= n and d <= trial_cap:
        while n % d == 0:
            acc[d] = acc.get(d, 0) + 1
            n //= d
        d += _WHEEL[i]
        i = (i + 1) % len(_WHEEL)
    if n > 1:
        if d * d > n:
            acc[n] = acc.get(n, 0) + 1
        else:
            _factor_into(n, acc)
    return Factorization(orig, tuple(sorted(acc.items())))


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n).factors)


def big_omega(n: int) -> int:
    """Number of prime divisors counted with multiplicity."""
    return sum(e for _, e in factorize(n).factors)


def tau(n: int) -> int:
    """Number of divisors."""
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def omega_odd(n: int) -> int:
    """Number of distinct odd prime divisors."""
    return sum(1 for p, _ in factorize(n).factors if p != 2)


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m, normalized to [0, m-1]; exact for any int inputs."""
    if exp < 0:
        raise ValueError(f"negative exponent: {exp}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return pow(base % m, exp, m)


def integer_nth_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) computed exactly for x >= 0, k >= 1."""
    if x < 0 or k < 1:
        raise ValueError(f"bad nth-root arguments: x={x}, k={k}")
    if x == 0:
        return 0
    if k == 1:
        return x
    r = int(round(x ** (1.0 / k)))
    while r > 0 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r
