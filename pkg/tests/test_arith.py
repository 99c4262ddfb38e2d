import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import trial_division_is_prime
from padfix import sieves
from padfix.arith import (
    Factorization,
    PrimeModulus,
    as_prime,
    big_omega,
    divisors,
    factorize,
    integer_nth_root,
    is_prime,
    mod_pow,
    omega,
    omega_odd,
    prime_count_odd,
    primes_in,
    tau,
)


class TestIsPrime:
    def test_matches_trial_division_below_3000(self):
        for n in range(3000):
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_known_values(self):
        assert is_prime(7)
        assert not is_prime(1)
        assert is_prime(1000003)  # verified by trial division up to sqrt(n)
        assert trial_division_is_prime(1000003)

    def test_strong_pseudoprimes_rejected(self):
        # Carmichael numbers and classic MR stumbling blocks
        for n in (561, 1105, 1729, 3215031751, 3825123056546413051):
            assert not is_prime(n), n

    def test_large_prime_and_semiprime(self):
        mersenne61 = 2**61 - 1
        assert is_prime(mersenne61)
        assert not is_prime(mersenne61 * (2**31 - 1))

    @given(st.integers(min_value=0, max_value=2**63 - 1))
    @settings(max_examples=150)
    def test_agrees_with_sympy(self, n):
        assert is_prime(n) == sympy.isprime(n)


class TestPrimeModulus:
    def test_accepts_primes(self):
        assert PrimeModulus(2) == 2
        assert int(PrimeModulus(97)) == 97

    def test_rejects_composites(self):
        for n in (0, 1, 4, 9, 1000001):
            with pytest.raises(ValueError):
                PrimeModulus(n)

    def test_as_prime_passthrough(self):
        p = PrimeModulus(11)
        assert as_prime(p) is p
        assert isinstance(as_prime(11), PrimeModulus)


class TestPrimesIn:
    def test_examples(self):
        assert primes_in(3, 12) == [3, 5, 7, 11]
        assert primes_in(14, 16) == []
        assert len(primes_in(1, 100)) == 25

    def test_inverted_interval_raises(self):
        with pytest.raises(ValueError):
            primes_in(10, 3)

    def test_segment_far_from_origin(self):
        lo = 10**12
        got = primes_in(lo, lo + 200)
        assert got == list(sympy.primerange(lo, lo + 201))

    @given(st.integers(min_value=2, max_value=50_000))
    @settings(max_examples=60)
    def test_length_is_odd_count_plus_one(self, n):
        assert len(primes_in(1, n)) == prime_count_odd(n) + 1


class TestPrimeCountOdd:
    def test_examples(self):
        assert prime_count_odd(10) == 3  # {3, 5, 7}
        assert prime_count_odd(2) == 0
        assert prime_count_odd(10**6) == 78497


class TestFactorize:
    def test_examples(self):
        assert factorize(12).factors == ((2, 2), (3, 1))
        assert factorize(1).factors == ()
        assert factorize(510510).factors == tuple(
            (p, 1) for p in (2, 3, 5, 7, 11, 13, 17)
        )

    def test_rejects_nonpositive(self):
        for n in (0, -5):
            with pytest.raises(ValueError):
                factorize(n)

    def test_round_trip_exhaustive(self):
        # reassembling the factors must reproduce n across the whole box
        for n in range(1, 10**5 + 1):
            f = factorize(n)
            assert f.reassemble() == n, n

    def test_canonical_shape(self):
        f = factorize(2**5 * 3 * 49)
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes)
        assert all(e >= 1 for _, e in f.factors)
        assert all(is_prime(p) for p in primes)

    @given(st.integers(min_value=2, max_value=2**63 - 1))
    @settings(max_examples=60, deadline=None)
    def test_matches_sympy_on_large_inputs(self, n):
        got = dict(factorize(n).factors)
        assert got == sympy.factorint(n)

    def test_large_semiprime_split(self):
        p, q = 1000003, 1000033
        assert factorize(p * q).factors == ((p, 1), (q, 1))


class TestCountingFunctions:
    def test_examples(self):
        assert (omega(12), big_omega(12), tau(12)) == (2, 3, 6)
        assert (omega(1), big_omega(1), tau(1)) == (0, 0, 1)
        assert (omega(30), big_omega(30), tau(30)) == (3, 3, 8)

    def test_omega_odd_examples(self):
        assert omega_odd(12) == 1
        assert omega_odd(15) == 2
        assert omega_odd(2) == 0

    def test_tau_against_brute_force(self):
        # independent oracle: count every divisor d <= n directly
        for n in range(1, 10**4 + 1):
            d = np.arange(1, n + 1)
            assert tau(n) == int((n % d == 0).sum()), n

    def test_divisor_bound_box(self):
        # 2**omega(n) <= tau(n) <= 2**big_omega(n) over the scalar box
        limit = 10**5
        om = sieves.omega_array(limit)
        bm = sieves.big_omega_array(limit)
        tu = sieves.tau_array(limit)
        n = slice(1, limit + 1)
        assert np.all((1 << om[n].astype(np.int64)) <= tu[n])
        assert np.all(tu[n] <= (1 << bm[n].astype(np.int64)))

    def test_divisors_sorted_and_complete(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]
        assert divisors(49) == [1, 7, 49]


class TestSieveArraysMatchScalars:
    """The numpy batch tables must agree with the factorize-based scalars."""

    LIMIT = 5000

    def test_flags_match_primes_in(self):
        flags = sieves.prime_flags(self.LIMIT)
        assert [int(i) for i in np.nonzero(flags)[0]] == primes_in(1, self.LIMIT)

    def test_prefixes(self):
        odd = sieves.odd_prime_prefix(self.LIMIT)
        for x in (0, 1, 2, 3, 4, 100, 4999, 5000):
            assert int(odd[x]) == prime_count_odd(x), x

    def test_counting_arrays(self):
        om = sieves.omega_array(self.LIMIT)
        bm = sieves.big_omega_array(self.LIMIT)
        oo = sieves.omega_odd_array(self.LIMIT)
        tu = sieves.tau_array(self.LIMIT)
        for n in list(range(1, 200)) + [720, 1024, 2310, 4096, 4999, 5000]:
            assert int(om[n]) == omega(n)
            assert int(bm[n]) == big_omega(n)
            assert int(oo[n]) == omega_odd(n)
            assert int(tu[n]) == tau(n)


class TestModPow:
    def test_examples(self):
        assert mod_pow(2, 10, 1000) == 24
        assert mod_pow(5, 0, 7) == 1
        assert mod_pow(-1, 3, 7) == 6

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            mod_pow(2, -1, 7)
        with pytest.raises(ValueError):
            mod_pow(2, 3, 1)

    def test_fermat_full_box(self):
        # z**p == z (mod p) for every residue of every prime p <= 10**4
        for p in primes_in(2, 10**4):
            for z in range(p):
                assert mod_pow(z, p, p) == z

    @given(
        st.integers(min_value=-(2**63), max_value=2**63),
        st.integers(min_value=0, max_value=512),
        st.integers(min_value=2, max_value=2**63),
    )
    @settings(max_examples=120)
    def test_matches_builtin_pow(self, base, exp, m):
        assert mod_pow(base, exp, m) == pow(base, exp, m)


class TestIntegerNthRoot:
    def test_exact_powers(self):
        assert integer_nth_root(8, 3) == 2
        assert integer_nth_root(16**3, 4) == 8
        assert integer_nth_root(0, 5) == 0

    @given(st.integers(min_value=0, max_value=10**28), st.integers(min_value=1, max_value=12))
    @settings(max_examples=200)
    def test_floor_property(self, x, k):
        r = integer_nth_root(x, k)
        assert r**k <= x < (r + 1) ** k


def test_factorization_dataclass_round_trip():
    f = Factorization(n=12, factors=((2, 2), (3, 1)))
    assert f.reassemble() == 12
