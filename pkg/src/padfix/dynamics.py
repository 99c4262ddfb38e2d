"""Iteration of the maps z -> z**d + c: exactly over Z/pZ and over Q.

Orbit records carry the minimal preperiod and eventual period; fixed-point
reports come from exhaustive residue scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .arith import PrimeModulus, as_prime, divisors

Coefficient = Union[int, Fraction]

# Residue power tables are cached per (d, p); above this modulus fall back
# to per-residue pow so one huge p cannot pin memory.
_POW_TABLE_MAX = 200_000

DEFAULT_SIZE_CUTOFF_BITS = 512


@dataclass(frozen=True)
class MapSpec:
    """The map z -> z**d + c; degree d >= 2, integer or rational c."""

    d: int
    c: Coefficient

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"degree must be >= 2, got {self.d}")

    def integral_c(self) -> int:
        """The coefficient as an int; rejects non-integral rationals."""
        if isinstance(self.c, Fraction):
            if self.c.denominator != 1:
                raise ValueError(f"modular work needs an integer coefficient, got {self.c}")
            return int(self.c)
        return self.c


class OrbitStatus(str, Enum):
    RESOLVED = "resolved"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class OrbitRecord:
    """One traced orbit.

    Resolved records satisfy step(cycle[-1]) == cycle[0] with (preperiod,
    period) minimal. Divergent records keep the points computed before an
    iterate outgrew the size cutoff; their period is 0 and cycle empty.
    """

    start: Coefficient
    status: OrbitStatus
    preperiod: int
    period: int
    tail: tuple
    cycle: tuple

    @property
    def resolved(self) -> bool:
        return self.status is OrbitStatus.RESOLVED


@dataclass(frozen=True)
class FixedPointReport:
    """All residues z in [0, p-1] with z**d + c == z (mod p)."""

    p: PrimeModulus
    map: MapSpec
    residues: tuple[int, ...]

    @property
    def literal_count(self) -> int:
        return len(self.residues)


@lru_cache(maxsize=512)
def _pow_table(d: int, p: int) -> tuple[int, ...]:
    return tuple(pow(z, d, p) for z in range(p))


def _step_mod(map_spec: MapSpec, p: int):
    c = map_spec.integral_c() % p
    if p <= _POW_TABLE_MAX:
        tbl = _pow_table(map_spec.d, p)
        return lambda z: (tbl[z] + c) % p
    d = map_spec.d
    return lambda z: (pow(z, d, p) + c) % p


def eval_mod(map_spec: MapSpec, z: int, p: int) -> int:
    """(z**d + c) mod p, normalized to [0, p-1] for any sign of c."""
    p = as_prime(p)
    if not 0 <= z < p:
        raise ValueError(f"residue out of range: z={z}, p={p}")
    return (pow(z, map_spec.d, p) + map_spec.integral_c()) % p


def fixed_points_mod(map_spec: MapSpec, p: int) -> FixedPointReport:
    """Exhaustive scan of all p residues for fixed points of the map."""
    p = as_prime(p)
    c = map_spec.integral_c() % p
    if p <= _POW_TABLE_MAX:
        tbl = _pow_table(map_spec.d, p)
        residues = tuple(z for z in range(p) if tbl[z] == (z - c) % p)
    else:
        d = map_spec.d
        residues = tuple(z for z in range(p) if pow(z, d, p) == (z - c) % p)
    return FixedPointReport(p=p, map=map_spec, residues=residues)


def _trace(step, start, too_big=None):
    """Iterate until the first repeat, returning (points, preperiod, period).

    The first repeated value pins the minimal (m, n). When too_big fires
    before any repeat, period is None and the points are the tail so far.
    """
    seen: dict = {}
    points: list = []
    z = start
    while True:
        if too_big is not None and too_big(z):
            return points, len(points), None
        if z in seen:
            m = seen[z]
            return points, m, len(points) - m
        seen[z] = len(points)
        points.append(z)
        z = step(z)


def orbit_mod(map_spec: MapSpec, z0: int, p: int) -> OrbitRecord:
    """Trace z0 under the map over Z/pZ; always resolves (finite state)."""
    p = as_prime(p)
    if not 0 <= z0 < p:
        raise ValueError(f"start residue out of range: z0={z0}, p={p}")
    points, m, n = _trace(_step_mod(map_spec, p), z0)
    return OrbitRecord(
        start=z0,
        status=OrbitStatus.RESOLVED,
        preperiod=m,
        period=n,
        tail=tuple(points[:m]),
        cycle=tuple(points[m:]),
    )


def orbit_rational(
    map_spec: MapSpec,
    z0: Coefficient,
    size_cutoff_bits: int = DEFAULT_SIZE_CUTOFF_BITS,
) -> OrbitRecord:
    """Exact rational iteration; divergent once an iterate's numerator or
    denominator exceeds the bit cutoff."""
    if size_cutoff_bits < 1:
        raise ValueError(f"cutoff must be positive, got {size_cutoff_bits}")
    c = Fraction(map_spec.c)
    d = map_spec.d
    start = Fraction(z0)

    def too_big(q: Fraction) -> bool:
        return (
            q.numerator.bit_length() > size_cutoff_bits
            or q.denominator.bit_length() > size_cutoff_bits
        )

    points, m, n = _trace(lambda z: z**d + c, start, too_big)
    if n is None:
        return OrbitRecord(
            start=start,
            status=OrbitStatus.DIVERGENT,
            preperiod=m,
            period=0,
            tail=tuple(points),
            cycle=(),
        )
    return OrbitRecord(
        start=start,
        status=OrbitStatus.RESOLVED,
        preperiod=m,
        period=n,
        tail=tuple(points[:m]),
        cycle=tuple(points[m:]),
    )


def integer_fixed_points(map_spec: MapSpec) -> list[int]:
    """All integer solutions of z**d - z + c == 0, ascending.

    c == 0 has the closed-form root set of z * (z**(d-1) - 1); otherwise the
    polynomial is monic so every integer root divides c, and the divisors of
    |c| are tested exactly.
    """
    d = map_spec.d
    c = map_spec.integral_c()
    if c == 0:
        return [-1, 0, 1] if d % 2 == 1 else [0, 1]
    roots = []
    for t in divisors(abs(c)):
        for z in (t, -t):
            if z**d - z + c == 0:
                roots.append(z)
    return sorted(set(roots))
