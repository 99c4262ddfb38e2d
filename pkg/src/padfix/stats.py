"""Averages over constrained coefficient sequences, density series over
growing coefficient ranges, and height-ordered family counts.

Ratios and means are exact rationals end to end; floats appear only when a
caller renders them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import factorize, integer_nth_root, is_prime, omega, omega_odd, primes_in, tau
from .counting import FAMILY_MIN_PRIME, Family, count_fixed_points, predict
from .sieves import odd_prime_prefix


class CoeffFilter(str, Enum):
    """How c is tied to each sampled prime p: c = p*t + offset."""

    DIVIDES_C = "divides-c"
    DIVIDES_C_MINUS_1 = "divides-c-minus-1"
    DIVIDES_C_PLUS_1 = "divides-c-plus-1"
    NOT_DIVIDES_C = "not-divides-c"


# NOT_DIVIDES_C uses offset 2: the residue is 2, hence nonzero for any p >= 3.
_FILTER_OFFSET = {
    CoeffFilter.DIVIDES_C: 0,
    CoeffFilter.DIVIDES_C_MINUS_1: 1,
    CoeffFilter.DIVIDES_C_PLUS_1: -1,
    CoeffFilter.NOT_DIVIDES_C: 2,
}


class CountMode(str, Enum):
    LITERAL = "literal"
    PREDICTED = "predicted"


@dataclass(frozen=True)
class AverageReport:
    """Exact mean of fixed-point counts over the constructed sample grid.

    total is the raw (unreduced) numerator; mean reduces total/sample_count.
    """

    family: Family
    coeff_filter: CoeffFilter
    mode: CountMode
    prime_lo: int
    prime_hi: int
    t_range: int
    sample_count: int
    total: int

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.sample_count)


def average_fixed_count(
    family: Family,
    coeff_filter: CoeffFilter,
    mode: CountMode,
    prime_lo: int,
    prime_hi: int,
    t_range: int,
) -> AverageReport:
    """Average the family's count over c = p*t + offset for every prime p in
    range and t in [1, t_range]; construction makes every sample admissible."""
    if t_range < 1:
        raise ValueError(f"t_range must be >= 1, got {t_range}")
    lo = max(prime_lo, FAMILY_MIN_PRIME[family])
    primes = primes_in(lo, prime_hi) if lo <= prime_hi else []
    offset = _FILTER_OFFSET[coeff_filter]
    total = 0
    samples = 0
    for p in primes:
        for t in range(1, t_range + 1):
            c = p * t + offset
            if mode is CountMode.LITERAL:
                n = count_fixed_points(family, c, p)
            else:
                prediction = predict(family, c, p)
                if not prediction.covered:
                    raise ValueError(
                        f"predicted mode has no coverage for filter "
                        f"{coeff_filter.value} in family {family.value}"
                    )
                n = prediction.predicted
            total += n
            samples += 1
    if samples == 0:
        raise ValueError(
            f"empty sample set: no primes of family {family.value} in "
            f"[{prime_lo}, {prime_hi}]"
        )
    return AverageReport(
        family=family,
        coeff_filter=coeff_filter,
        mode=mode,
        prime_lo=prime_lo,
        prime_hi=prime_hi,
        t_range=t_range,
        sample_count=samples,
        total=total,
    )


class DensityKind(str, Enum):
    """Which defining condition the series counts, per coefficient c.

    OMEGA_RATIO   distinct odd prime divisors of c over primes in [3, c]
                  (the divisibility count behind "three fixed points")
    P_ZERO        primes in [3, c] where the degree-p map has no fixed points
    PM1_TWO       primes in [5, c] where the degree-(p-1) map has two
    PM1_ONE       primes in [5, c] where the degree-(p-1) map has one
    PM1_ZERO      primes in [5, c] where the degree-(p-1) map has none
    """

    OMEGA_RATIO = "omega-ratio"
    P_ZERO = "p-zero"
    PM1_TWO = "pm1-two"
    PM1_ONE = "pm1-one"
    PM1_ZERO = "pm1-zero"


_KIND_MIN_C = {
    DensityKind.OMEGA_RATIO: 3,
    DensityKind.P_ZERO: 3,
    DensityKind.PM1_TWO: 5,
    DensityKind.PM1_ONE: 5,
    DensityKind.PM1_ZERO: 5,
}


@dataclass(frozen=True)
class DensityRow:
    c: int
    numerator: int
    denominator: int
    ratio: Fraction


@dataclass(frozen=True)
class DensitySeries:
    kind: DensityKind
    mode: CountMode
    rows: tuple[DensityRow, ...]


def _omega_ge5(n: int) -> int:
    """Distinct prime divisors >= 5."""
    if n <= 1:
        return 0
    return sum(1 for p, _ in factorize(n).factors if p >= 5)


def _check_series_range(kind: DensityKind, c_lo: int, c_hi: int, stride: int) -> None:
    fmin = _KIND_MIN_C[kind]
    if not fmin <= c_lo <= c_hi:
        raise ValueError(
            f"kind {kind.value} needs {fmin} <= c_lo <= c_hi, "
            f"got c_lo={c_lo}, c_hi={c_hi}"
        )
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")


def density_omega_series(
    c_lo: int, c_hi: int, stride: int = 1, mode: CountMode = CountMode.PREDICTED
) -> DensitySeries:
    """Rows (c, numerator, #primes in [3, c], ratio).

    Predicted mode counts odd primes dividing c (the divisibility reduction
    of the three-fixed-point condition); literal mode counts primes whose
    exhaustive count is exactly 3, which the degree-p scan satisfies only at
    p = 3 with 3 | c.
    """
    _check_series_range(DensityKind.OMEGA_RATIO, c_lo, c_hi, stride)
    prefix = odd_prime_prefix(c_hi)
    rows = []
    for c in range(c_lo, c_hi + 1, stride):
        den = int(prefix[c])
        if mode is CountMode.PREDICTED:
            num = omega_odd(c)
        else:
            num = 1 if c % 3 == 0 else 0
        rows.append(DensityRow(c, num, den, Fraction(num, den)))
    return DensitySeries(DensityKind.OMEGA_RATIO, mode, tuple(rows))


def density_fixed_count(
    kind: DensityKind,
    c_lo: int,
    c_hi: int,
    stride: int = 1,
    mode: CountMode = CountMode.LITERAL,
) -> DensitySeries:
    """Rows (c, #primes meeting the kind's condition, #primes in range, ratio).

    The numerator follows the literal counter. Fermat's little theorem pins
    the literal values per residue class (family "p": p or 0 by p | c;
    family "p-1": 2, 0, or 1 by c mod p in {0, p-1, other}), so each row
    reduces to divisibility conditions evaluated through factorization; the
    test suite re-checks rows against exhaustive residue scans. Predicted
    mode differs only for PM1_ONE, where it counts p | (c - 1), the coverage
    set of the closed-form rule.
    """
    if kind is DensityKind.OMEGA_RATIO:
        raise ValueError("use density_omega_series for the omega-ratio kind")
    _check_series_range(kind, c_lo, c_hi, stride)
    prefix = odd_prime_prefix(c_hi)
    rows = []
    for c in range(c_lo, c_hi + 1, stride):
        den3 = int(prefix[c])
        if kind is DensityKind.P_ZERO:
            den = den3
            num = den3 - omega_odd(c)
        else:
            den = den3 - 1
            two = _omega_ge5(c)
            zero = _omega_ge5(c + 1) - (1 if is_prime(c + 1) else 0)
            if kind is DensityKind.PM1_TWO:
                num = two
            elif kind is DensityKind.PM1_ZERO:
                num = zero
            elif mode is CountMode.PREDICTED:
                num = _omega_ge5(c - 1)
            else:
                num = den - two - zero
        rows.append(DensityRow(c, num, den, Fraction(num, den)))
    return DensitySeries(kind, mode, tuple(rows))


def density_bound_check(c: int) -> bool:
    """2**omega(c) <= tau(c), compared as exact integers."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    return 2 ** omega(c) <= tau(c)


def height(degree: int, c: int) -> float:
    """|c| ** (1/degree); the ordering weight of the monic trinomial family."""
    if c == 0:
        return 0.0
    return abs(c) ** (1.0 / degree)


@dataclass(frozen=True)
class FamilyCountReport:
    """Integer-root census of x**degree - x + c for c in [1, coefficient_bound],
    where the bound translates a discriminant cap X through the height order."""

    degree: int
    X: int
    coefficient_bound: int
    total: int
    with_integer_root: int
    without_integer_root: int


def family_count(degree: int, X: int) -> FamilyCountReport:
    """coefficient_bound = floor(X ** (degree / (2*degree - 2))), computed as
    an exact integer root; roots are marked by the reverse sweep c = z - z**degree.

    Only odd degrees admit integer roots with c >= 1: even powers make
    z - z**degree nonpositive everywhere.
    """
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    if X < 1:
        raise ValueError(f"X must be >= 1, got {X}")
    bound = integer_nth_root(X**degree, 2 * degree - 2)
    hits: set[int] = set()
    if degree % 2 == 1:
        z = -2
        while True:
            c = z - z**degree
            if c > bound:
                break
            if c >= 1:
                hits.add(c)
            z -= 1
    return FamilyCountReport(
        degree=degree,
        X=X,
        coefficient_bound=bound,
        total=bound,
        with_integer_root=len(hits),
        without_integer_root=bound - len(hits),
    )
