"""Factorization, primality, and factorial divisibility.

Oracles here are direct computation: multiplying a factorization back
together, a prime sieve, and literal ``n! % v``.  Random cases use a fixed
seed so failures reproduce.
"""

import math
import random

import pytest

from kendallcodes import numtheory
from kendallcodes.numtheory import (
    DEFAULT_RHO_BUDGET,
    FactorizationBudgetError,
    MAX_FACTORIAL_N,
    divides_factorial,
    factorial,
    factorial_valuation,
    factorize,
    format_factorization,
    is_probable_prime,
    max_prime_factor,
    parse_factorization,
)

# primes straddling the trial-division bound and beyond
P_BIG_1 = 10**9 + 7
P_BIG_2 = 10**9 + 9
M31 = 2**31 - 1


def test_factorize_golden_values():
    assert factorize(1) == ()
    assert factorize(2) == ((2, 1),)
    assert factorize(97) == ((97, 1),)
    assert factorize(1024) == ((2, 10),)
    assert factorize(210) == ((2, 1), (3, 1), (5, 1), (7, 1))
    assert factorize(441) == ((3, 2), (7, 2))
    assert factorize(3249) == ((3, 2), (19, 2))
    assert factorize(1715) == ((5, 1), (7, 3))
    assert factorize(24) == ((2, 3), (3, 1))
    # the classic split of 2^32 + 1
    assert factorize(2**32 + 1) == ((641, 1), (6700417, 1))


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-441)


def test_factorize_random_roundtrip():
    rng = random.Random(20260818)
    for _ in range(2000):
        v = rng.randrange(1, 2**36)
        factors = factorize(v)
        assert math.prod(p**e for p, e in factors) == v
        primes = [p for p, _ in factors]
        assert primes == sorted(set(primes))
        assert all(e >= 1 for _, e in factors)
        assert all(is_probable_prime(p) for p in primes)


def test_factorize_beyond_trial_division():
    # factors too large for the sieve force the cycle-finding phase
    pool = (2, 3, 1009, 999983, 1000003, M31, 2**32 + 15, P_BIG_1, P_BIG_2)
    rng = random.Random(7)
    for _ in range(25):
        chosen = rng.sample(pool, rng.randint(1, 3))
        expected = tuple(sorted((p, rng.randint(1, 2)) for p in chosen))
        v = math.prod(p**e for p, e in expected)
        assert factorize(v) == expected
    assert factorize(P_BIG_1 * P_BIG_2) == ((P_BIG_1, 1), (P_BIG_2, 1))
    assert factorize(M31 * M31) == ((M31, 2),)


def test_factorize_is_deterministic():
    for v in (441, P_BIG_1 * P_BIG_2, M31**2 * 3, 2**40 - 1):
        assert factorize(v) == factorize(v)


def test_factorize_budget_exhaustion_reports_partial_state():
    v = P_BIG_1 * P_BIG_2
    with pytest.raises(FactorizationBudgetError) as info:
        factorize(v, rho_budget=0)
    err = info.value
    assert err.value == v
    assert err.known == ()
    assert err.cofactor == v

    with pytest.raises(FactorizationBudgetError) as info:
        factorize(2 * v, rho_budget=0)
    err = info.value
    assert err.value == 2 * v
    assert err.known == ((2, 1),)
    assert err.cofactor == v
    assert math.prod(p**e for p, e in err.known) * err.cofactor == err.value

    # the same value factors fine once the budget is realistic
    assert factorize(v, rho_budget=DEFAULT_RHO_BUDGET) == (
        (P_BIG_1, 1),
        (P_BIG_2, 1),
    )


def test_is_probable_prime_matches_sieve():
    sieve_primes = set(numtheory._small_primes())
    for n in range(-2, 30000):
        assert is_probable_prime(n) == (n in sieve_primes), n


def test_is_probable_prime_spot_checks():
    assert not is_probable_prime(41041)  # Carmichael
    assert not is_probable_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    assert is_probable_prime(999983)
    assert is_probable_prime(1000003)
    assert is_probable_prime(P_BIG_1)
    assert is_probable_prime(2**127 - 1)


def test_is_probable_prime_beyond_deterministic_bound():
    # these exceed the proven base-set bound, exercising the Lucas stage
    assert is_probable_prime(2**89 - 1)
    assert is_probable_prime(2**107 - 1)
    assert not is_probable_prime(2**101 - 1)
    assert not is_probable_prime((2**89 - 1) ** 2)
    assert not is_probable_prime((2**89 - 1) * (2**107 - 1))


def test_strong_lucas_accepts_primes_rejects_easy_composites():
    for p in numtheory._small_primes():
        if p > 1000:
            break
        if p >= 41:
            assert numtheory._strong_lucas_prp(p), p
    for square in (9, 49, 121, 169):
        assert not numtheory._strong_lucas_prp(square)
    for n in (15, 35, 561, 1105, 1729):
        assert not numtheory._strong_lucas_prp(n)


def test_max_prime_factor():
    assert max_prime_factor(factorize(441)) == 7
    assert max_prime_factor(factorize(3249)) == 19
    assert max_prime_factor(((2, 5),)) == 2
    with pytest.raises(ValueError):
        max_prime_factor(())


def test_factorial_valuation_golden_values():
    assert factorial_valuation(13, 7) == 1
    assert factorial_valuation(13, 3) == 5
    assert factorial_valuation(26, 3) == 10
    assert factorial_valuation(26, 19) == 1
    assert factorial_valuation(10, 2) == 8
    assert factorial_valuation(1, 2) == 0
    assert factorial_valuation(0, 2) == 0


def test_factorial_valuation_scales_without_factorial():
    # exponent of 2 in n! equals n minus the binary digit sum
    for n in (10**6, 10**9, 10**12):
        assert factorial_valuation(n, 2) == n - bin(n).count("1")


def test_factorial_valuation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        factorial_valuation(-1, 2)
    with pytest.raises(ValueError):
        factorial_valuation(10, 4)
    with pytest.raises(ValueError):
        factorial_valuation(10, 1)


def test_factorial_valuation_matches_direct_factorization():
    for n in range(2, 21):
        direct = dict(factorize(math.factorial(n)))
        for p in numtheory._small_primes():
            if p > n:
                break
            assert factorial_valuation(n, p) == direct[p], (n, p)


def test_divides_factorial_golden_values():
    assert not divides_factorial(factorize(441), 13)
    assert not divides_factorial(factorize(3249), 26)
    assert not divides_factorial(factorize(1715), 13)
    assert divides_factorial(factorize(24), 4)
    assert divides_factorial((), 1)
    with pytest.raises(ValueError):
        divides_factorial(factorize(24), 0)


def test_divides_factorial_exhaustive_small():
    factorizations = {v: factorize(v) for v in range(1, 2001)}
    for n in range(1, 31):
        fact = math.factorial(n)
        for v, factors in factorizations.items():
            assert divides_factorial(factors, n) == (fact % v == 0), (v, n)


def test_divides_factorial_sampled_large():
    rng = random.Random(99)
    factorials = {n: math.factorial(n) for n in range(1, 31)}
    for _ in range(300):
        v = rng.randrange(1, 10**6 + 1)
        factors = factorize(v)
        for n in (1, 5, 13, 26, 30):
            assert divides_factorial(factors, n) == (factorials[n] % v == 0), (v, n)


def test_factorial_cap():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(MAX_FACTORIAL_N) == math.factorial(MAX_FACTORIAL_N)
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(ValueError):
        factorial(MAX_FACTORIAL_N + 1)


def test_format_factorization():
    assert format_factorization(()) == "1"
    assert format_factorization(((7, 1),)) == "7^1"
    assert format_factorization(((3, 2), (7, 2))) == "3^2 * 7^2"


def test_parse_factorization_roundtrip():
    for v in (1, 2, 24, 441, 3249, 1715, 1024, 210):
        factors = factorize(v)
        assert parse_factorization(format_factorization(factors)) == factors
    assert parse_factorization("  3^2   *  7^2 ") == ((3, 2), (7, 2))


def test_parse_factorization_rejects_malformed_text():
    for text in ("", "4", "2^", "^3", "x^2", "2^0", "1^1", "-3^1",
                 "7^2 * 3^2", "2^1 * 2^1", "2^1 * 1", "3.5^2"):
        with pytest.raises(ValueError):
            parse_factorization(text)
