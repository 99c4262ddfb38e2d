import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_fixed_count
from padfix.arith import primes_in
from padfix.counting import (
    Family,
    Verdict,
    count_degree_p,
    count_degree_pm1,
    count_fixed_points,
    predict,
    predict_degree_p,
    predict_degree_pm1,
    verify_prediction,
)

PRIMES_199 = primes_in(3, 199)

coeff = st.integers(min_value=-(10**4), max_value=10**4)


class TestLiteralCounts:
    def test_degree_p_base_cases(self):
        assert count_degree_p(3, 3) == 3
        assert count_degree_p(1, 3) == 0
        # Fermat makes every residue a root of z**p - z once p | c
        assert count_degree_p(5, 5) == 5
        assert count_degree_p(7, 5) == 0

    def test_degree_pm1_base_cases(self):
        assert count_degree_pm1(0, 5) == 2
        assert count_degree_pm1(1, 5) == 1
        assert count_degree_pm1(4, 5) == 0
        assert count_degree_pm1(2, 7) == 1

    def test_degenerate_prime_rejected(self):
        with pytest.raises(ValueError):
            count_degree_p(1, 2)
        with pytest.raises(ValueError):
            count_degree_pm1(1, 3)
        with pytest.raises(ValueError):
            count_degree_p(1, 9)

    @given(coeff, st.sampled_from(PRIMES_199))
    @settings(max_examples=200)
    def test_residue_dependence(self, c, p):
        assert count_degree_p(c, p) == count_degree_p(c % p, p)
        if p >= 5:
            assert count_degree_pm1(c, p) == count_degree_pm1(c % p, p)

    @given(coeff, st.sampled_from(primes_in(5, 199)))
    @settings(max_examples=150)
    def test_degree_p_literal_is_p_or_zero(self, c, p):
        expected = p if c % p == 0 else 0
        assert count_degree_p(c, p) == expected

    @given(coeff, st.sampled_from(primes_in(5, 199)))
    @settings(max_examples=150)
    def test_degree_pm1_literal_range(self, c, p):
        assert count_degree_pm1(c, p) in (0, 1, 2)

    @given(coeff, st.sampled_from(primes_in(5, 97)))
    @settings(max_examples=100)
    def test_matches_naive_oracle(self, c, p):
        assert count_degree_p(c, p) == naive_fixed_count(p, c, p)
        assert count_degree_pm1(c, p) == naive_fixed_count(p - 1, c, p)


class TestPredictors:
    def test_degree_p(self):
        assert predict_degree_p(21, 7).predicted == 3
        assert predict_degree_p(22, 7).predicted == 0
        assert predict_degree_p(0, 3).predicted == 3

    def test_degree_p_always_covered(self):
        for p in (3, 5, 97):
            for c in range(-5, 6):
                assert predict_degree_p(c, p).covered

    def test_rule_names(self):
        assert predict_degree_p(0, 3).rule == "degree-3"
        assert predict_degree_p(0, 7).rule == "degree-p"
        assert predict_degree_pm1(0, 5).rule == "degree-4"
        assert predict_degree_pm1(0, 7).rule == "degree-p-1"

    def test_degree_pm1_covered_classes(self):
        assert predict_degree_pm1(8, 7).predicted == 1
        assert predict_degree_pm1(14, 7).predicted == 2
        assert predict_degree_pm1(6, 7).predicted == 0
        rec = predict_degree_pm1(5, 7)
        assert not rec.covered and rec.predicted is None

    def test_negative_coefficients_normalize(self):
        assert predict_degree_pm1(-1, 7).predicted == 0
        assert predict_degree_pm1(-7, 7).predicted == 2
        assert predict_degree_p(-14, 7).predicted == 3

    def test_extension_rule(self):
        rec = predict_degree_pm1(5, 7, extended=True)
        assert rec.predicted == 1
        assert rec.rule == "derived-extension"
        # covered classes keep their base rule under the flag
        assert predict_degree_pm1(14, 7, extended=True).rule == "degree-p-1"

    def test_extension_matches_brute_force(self):
        for p in (5, 7, 11, 13):
            for c in range(p):
                rec = predict_degree_pm1(c, p, extended=True)
                assert rec.covered
                assert rec.predicted == naive_fixed_count(p - 1, c, p)


class TestVerify:
    def test_match(self):
        rec = verify_prediction(Family.DEGREE_P, 3, 3)
        assert rec.verdict is Verdict.MATCH
        assert rec.literal == rec.prediction.predicted == 3

    def test_mismatch_is_data(self):
        rec = verify_prediction(Family.DEGREE_P, 5, 5)
        assert rec.verdict is Verdict.MISMATCH
        assert rec.literal == 5
        assert rec.prediction.predicted == 3

    def test_not_covered_records_literal(self):
        rec = verify_prediction(Family.DEGREE_PM1, 2, 7)
        assert rec.verdict is Verdict.NOT_COVERED
        assert rec.literal == 1

    def test_family_dispatch(self):
        assert count_fixed_points(Family.DEGREE_P, 3, 3) == 3
        assert count_fixed_points(Family.DEGREE_PM1, 0, 5) == 2
        assert predict(Family.DEGREE_P, 21, 7).predicted == 3
        assert predict(Family.DEGREE_PM1, 8, 7).predicted == 1

    def test_degree_p_match_at_3_for_any_coefficient(self):
        for c in range(-300, 301):
            assert verify_prediction(Family.DEGREE_P, c, 3).verdict is Verdict.MATCH

    @given(coeff, st.sampled_from(primes_in(5, 199)))
    @settings(max_examples=150)
    def test_covered_pm1_classes_always_match(self, c, p):
        if c % p in (0, 1, p - 1):
            rec = verify_prediction(Family.DEGREE_PM1, c, p)
            assert rec.verdict is Verdict.MATCH
