"""Literal fixed-point counters for the two prime-indexed families, their
closed-form predictors, and the verifier that reconciles the two.

Family "p" is the degree-p map z**p + c counted mod p; family "p-1" is the
degree-(p-1) map counted mod p. The predictor for family "p" claims 3 or 0;
the literal scan gives p or 0 (all residues solve z**p == z), so the grid
verifier records mismatches as data instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .arith import PrimeModulus, as_prime
from .dynamics import MapSpec, fixed_points_mod


class Family(str, Enum):
    DEGREE_P = "p"
    DEGREE_PM1 = "p-1"


class Verdict(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    NOT_COVERED = "not-covered"


FAMILY_MIN_PRIME = {Family.DEGREE_P: 3, Family.DEGREE_PM1: 5}

# Rule names for the p = 3 and p = 5 base cases versus the general ones.
_RULE_P = {3: "degree-3", None: "degree-p"}
_RULE_PM1 = {5: "degree-4", None: "degree-p-1"}
RULE_EXTENSION = "derived-extension"


def family_degree(family: Family, p: int) -> int:
    return p if family is Family.DEGREE_P else p - 1


def check_family_prime(family: Family, p: int) -> PrimeModulus:
    """Certify p and enforce the family's minimum (3 for "p", 5 for "p-1")."""
    p = as_prime(p)
    lo = FAMILY_MIN_PRIME[family]
    if p < lo:
        raise ValueError(f"family {family.value} needs p >= {lo}, got {p}")
    return p


@dataclass(frozen=True)
class PredictionRecord:
    """A closed-form predicted count for one residue class of c mod p.

    predicted is None exactly when the rule does not cover the class.
    """

    family: Family
    residue_class: int
    predicted: Optional[int]
    rule: str

    @property
    def covered(self) -> bool:
        return self.predicted is not None


@dataclass(frozen=True)
class ComparisonRecord:
    p: PrimeModulus
    c: int
    family: Family
    literal: int
    prediction: PredictionRecord
    verdict: Verdict


def count_fixed_points(family: Family, c: int, p: int) -> int:
    """Literal count by exhaustive residue scan with the family's degree."""
    p = check_family_prime(family, p)
    return fixed_points_mod(MapSpec(family_degree(family, p), c), p).literal_count


def count_degree_p(c: int, p: int) -> int:
    """#{z mod p : z**p - z + c == 0 (mod p)}; requires p >= 3."""
    return count_fixed_points(Family.DEGREE_P, c, p)


def count_degree_pm1(c: int, p: int) -> int:
    """#{z mod p : z**(p-1) - z + c == 0 (mod p)}; requires p >= 5."""
    return count_fixed_points(Family.DEGREE_PM1, c, p)


def predict_degree_p(c: int, p: int) -> PredictionRecord:
    """Closed form for family "p": 3 when p divides c, else 0. Always covered."""
    p = check_family_prime(Family.DEGREE_P, p)
    r = c % p
    rule = _RULE_P.get(int(p), _RULE_P[None])
    return PredictionRecord(Family.DEGREE_P, r, 3 if r == 0 else 0, rule)


def predict_degree_pm1(c: int, p: int, extended: bool = False) -> PredictionRecord:
    """Closed form for family "p-1" on the covered classes of c mod p:
    0 -> 2, 1 -> 1, p-1 -> 0; anything else is not covered.

    With extended=True the remaining classes get the derived value 1 (from
    z**(p-1) == 1 on nonzero residues), flagged with a separate rule name.
    """
    p = check_family_prime(Family.DEGREE_PM1, p)
    r = c % p
    rule = _RULE_PM1.get(int(p), _RULE_PM1[None])
    if r == 0:
        return PredictionRecord(Family.DEGREE_PM1, r, 2, rule)
    if r == 1:
        return PredictionRecord(Family.DEGREE_PM1, r, 1, rule)
    if r == p - 1:
        return PredictionRecord(Family.DEGREE_PM1, r, 0, rule)
    if extended:
        return PredictionRecord(Family.DEGREE_PM1, r, 1, RULE_EXTENSION)
    return PredictionRecord(Family.DEGREE_PM1, r, None, rule)


def predict(family: Family, c: int, p: int, extended: bool = False) -> PredictionRecord:
    if family is Family.DEGREE_P:
        return predict_degree_p(c, p)
    return predict_degree_pm1(c, p, extended=extended)


def verify_prediction(
    family: Family, c: int, p: int, extended: bool = False
) -> ComparisonRecord:
    """Pair the literal and predicted counts; mismatches are data, not errors."""
    p = check_family_prime(family, p)
    literal = count_fixed_points(family, c, p)
    prediction = predict(family, c, p, extended=extended)
    if not prediction.covered:
        verdict = Verdict.NOT_COVERED
    elif prediction.predicted == literal:
        verdict = Verdict.MATCH
    else:
        verdict = Verdict.MISMATCH
    return ComparisonRecord(p, c, family, literal, prediction, verdict)
