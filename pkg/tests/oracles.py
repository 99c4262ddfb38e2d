"""Independent brute-force oracles for the test suite.

Nothing here shares a code path with the package: counts come from direct
big-integer polynomial evaluation, cycle structure from constant-memory
pointer chasing, and divisor sets from raw trial division.
"""

from __future__ import annotations

import math


def naive_fixed_residues(d: int, c: int, p: int) -> list[int]:
    """Fixed points of z**d + c mod p by direct evaluation at every residue."""
    return [z for z in range(p) if (z**d + c - z) % p == 0]


def naive_fixed_count(d: int, c: int, p: int) -> int:
    return len(naive_fixed_residues(d, c, p))


def floyd_cycle(step, x0) -> tuple[int, int]:
    """(preperiod, period) of x0 under step, by tortoise-and-hare pointer
    chasing in constant memory."""
    tortoise = step(x0)
    hare = step(step(x0))
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(step(hare))
    mu = 0
    tortoise = x0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    lam = 1
    hare = step(tortoise)
    while tortoise != hare:
        hare = step(hare)
        lam += 1
    return mu, lam


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def divisors_by_trial(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def has_integer_root_by_divisors(degree: int, c: int) -> bool:
    """Does x**degree - x + c have an integer root? Monic, so roots divide c."""
    if c == 0:
        return True
    for t in divisors_by_trial(abs(c)):
        for z in (t, -t):
            if z**degree - z + c == 0:
                return True
    return False
