"""Whole-range sieve tables for sweep-scale work.

These return numpy arrays indexed by n in [0, limit]. They are the batch
counterparts of the scalar functions in arith; the test suite cross-checks
the two routes against each other.
"""

from __future__ import annotations

import numpy as np


def prime_flags(limit: int) -> np.ndarray:
    """Boolean array: flags[n] iff n is prime."""
    if limit < 0:
        raise ValueError(f"negative limit: {limit}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[: min(2, limit + 1)] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def prime_prefix(limit: int) -> np.ndarray:
    """prefix[x] = number of primes <= x."""
    return np.cumsum(prime_flags(limit), dtype=np.int64)


def odd_prime_prefix(limit: int) -> np.ndarray:
    """prefix[x] = number of primes in [3, x] (drops 2 from the count)."""
    prefix = prime_prefix(limit)
    if limit >= 2:
        prefix[2:] -= 1
    return prefix


def omega_array(limit: int) -> np.ndarray:
    """omega(n) for every n <= limit (omega(0) and omega(1) are 0)."""
    flags = prime_flags(limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    for p in np.nonzero(flags)[0]:
        out[p::p] += 1
    return out


def big_omega_array(limit: int) -> np.ndarray:
    """big_omega(n), prime divisors with multiplicity, for every n <= limit."""
    flags = prime_flags(limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    for p in np.nonzero(flags)[0]:
        q = int(p)
        while q <= limit:
            out[q::q] += 1
            q *= int(p)
    return out


def omega_odd_array(limit: int) -> np.ndarray:
    """Distinct odd prime divisor counts for every n <= limit."""
    out = omega_array(limit)
    if limit >= 2:
        out[2::2] -= 1
    return out


def tau_array(limit: int) -> np.ndarray:
    """Divisor counts for every n in [1, limit]; tau_array(limit)[0] is 0."""
    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        out[d::d] += 1
    return out
