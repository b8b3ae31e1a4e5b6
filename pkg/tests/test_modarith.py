"""Modular arithmetic and the two Legendre-symbol engines."""

import pytest
from hypothesis import given, strategies as st

from modsquares.modarith import (
    MAX_MODULUS,
    OddPrime,
    Residue,
    Symbol,
    discrete_log,
    first_odd_primes,
    is_prime,
    legendre_euler,
    legendre_reciprocity,
    mul_mod,
    odd_primes_below,
    pow_mod,
    residue_rule,
    sqrt_mod,
)
from modsquares.primroots import smallest_primitive_root


def brute_squares(p):
    """Independent oracle: square every residue."""
    return {x * x % p for x in range(1, p)}


class TestIsPrime:
    def test_small_values(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_carmichael_numbers_rejected(self):
        # strong-pseudoprime traps for weak tests
        for n in (561, 1105, 1729, 2465, 2821, 6601):
            assert not is_prime(n)

    def test_large_known_prime(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) * (2**31 + 11))

    def test_prime_listing_matches_sieve(self):
        assert odd_primes_below(100) == [p for p in range(3, 100, 2) if is_prime(p)]
        assert first_odd_primes(7) == [3, 5, 7, 11, 13, 17, 19]


class TestOddPrime:
    @pytest.mark.parametrize("bad", [1, 2, 8, 9, 15, -7, 0, 8191 * 3])
    def test_rejects_non_odd_primes(self, bad):
        with pytest.raises(ValueError):
            OddPrime(bad)

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            OddPrime(2**63 + 37)

    def test_rejects_non_integers(self):
        with pytest.raises(ValueError):
            OddPrime(11.0)

    def test_accepts_and_unwraps(self):
        p = OddPrime(8191)
        assert int(p) == 8191
        assert range(int(p))[-1] == 8190


class TestResidue:
    def test_bounds_enforced(self):
        with pytest.raises(ValueError):
            Residue(11, 11)
        with pytest.raises(ValueError):
            Residue(-1, 11)
        with pytest.raises(ValueError):
            Residue(0, 1)

    def test_mul_and_pow(self):
        r = Residue(128, 8191)
        assert int(r.mul(r)) == 2
        assert int(r.pow(2)) == 2

    def test_mismatched_moduli(self):
        with pytest.raises(ValueError):
            Residue(1, 11).mul(Residue(1, 13))


class TestMulMod:
    def test_zero_annihilates(self):
        assert mul_mod(0, 1234, 8191) == 0

    def test_orbit_steps(self):
        # successive states of the multiplier-1904 walk mod 8191
        assert mul_mod(1904, 1, 8191) == 1904
        assert mul_mod(1904, 1904, 8191) == 4794
        assert mul_mod(1904, 4794, 8191) == 3002
        assert mul_mod(1904, 3002, 8191) == 6681
        assert mul_mod(1904, 6681, 8191) == 1

    def test_square_of_128(self):
        assert mul_mod(128, 128, 8191) == 2

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            mul_mod(0, 0, 1)
        with pytest.raises(ValueError):
            mul_mod(5, 2, 4)
        with pytest.raises(ValueError):
            mul_mod(1, 1, MAX_MODULUS)

    @given(st.integers(2, 10**9), st.data())
    def test_matches_plain_arithmetic(self, m, data):
        a = data.draw(st.integers(0, m - 1))
        b = data.draw(st.integers(0, m - 1))
        assert mul_mod(a, b, m) == (a * b) % m


class TestPowMod:
    def test_zero_exponent(self):
        assert pow_mod(5, 0, 11) == 1
        assert pow_mod(0, 0, 11) == 1

    def test_powers_of_two_mod_8191(self):
        assert pow_mod(2, 12, 8191) == 4096
        assert pow_mod(2, 13, 8191) == 1

    def test_euler_criterion_for_two(self):
        # consistent with (2/8191) = +1
        assert pow_mod(2, (8191 - 1) // 2, 8191) == 1

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            pow_mod(1, 2, 1)
        with pytest.raises(ValueError):
            pow_mod(3, 2, 3)
        with pytest.raises(ValueError):
            pow_mod(1, -1, 5)

    @given(st.integers(2, 10**6), st.data())
    def test_matches_builtin_pow(self, m, data):
        base = data.draw(st.integers(0, m - 1))
        exp = data.draw(st.integers(0, 10**6))
        assert pow_mod(base, exp, m) == pow(base, exp, m)


class TestLegendreEuler:
    def test_one_is_always_a_square(self):
        for p in first_odd_primes(20):
            assert legendre_euler(1, p) == Symbol.RESIDUE

    def test_two_mod_8191(self):
        assert legendre_euler(2, 8191) == 1

    def test_row_for_eleven(self):
        row = [int(legendre_euler(a, 11)) for a in range(1, 11)]
        assert row == [1, -1, 1, 1, 1, -1, -1, -1, 1, -1]

    def test_multiple_of_p_gives_zero(self):
        assert legendre_euler(0, 11) == Symbol.DIVISIBLE
        assert legendre_euler(22, 11) == 0
        assert legendre_euler(-11, 11) == 0

    def test_agrees_with_exhaustive_squaring(self):
        for p in odd_primes_below(200):
            squares = brute_squares(p)
            for a in range(1, p):
                expected = 1 if a in squares else -1
                assert legendre_euler(a, p) == expected

    def test_half_the_residues_are_squares(self):
        for p in odd_primes_below(300):
            plus = sum(1 for a in range(1, p) if legendre_euler(a, p) == 1)
            assert plus == (p - 1) // 2


class TestLegendreReciprocity:
    def test_p_on_itself_is_zero(self):
        for q in (3, 7, 11, 97):
            assert legendre_reciprocity(q, q) == 0

    def test_two_mod_8191(self):
        assert legendre_reciprocity(2, 8191) == 1

    def test_negative_arguments_reduce(self):
        assert legendre_reciprocity(-1, 13) == legendre_euler(-1, 13) == 1
        assert legendre_reciprocity(-1, 11) == legendre_euler(-1, 11) == -1

    def test_matches_euler_engine(self):
        for p in odd_primes_below(200):
            for a in range(1, p):
                assert legendre_reciprocity(a, p) == legendre_euler(a, p), (a, p)


def test_multiplicativity_small_range():
    for p in odd_primes_below(100):
        sym = [0] + [int(legendre_euler(a, p)) for a in range(1, p)]
        for a in range(1, p):
            for b in range(1, p):
                assert sym[a * b % p] == sym[a] * sym[b]


class TestResidueRule:
    def test_minus_one_rule(self):
        for p in odd_primes_below(500):
            expected = 1 if p % 4 == 1 else -1
            assert residue_rule(-1, p) == expected
            assert residue_rule(-1, p) == legendre_euler(-1, p)

    def test_two_mod_8191(self):
        assert residue_rule(2, 8191) == 1

    def test_six_mod_23(self):
        assert residue_rule(6, 23) == 1
        assert legendre_euler(6, 23) == 1

    def test_agrees_with_euler_small_range(self):
        for p in odd_primes_below(500):
            for a in (-1, 2, 3, 5, 6):
                if a > 0 and a % p == 0:
                    continue
                assert residue_rule(a, p) == legendre_euler(a, p), (a, p)

    def test_rejects_unsupported_argument(self):
        with pytest.raises(ValueError):
            residue_rule(7, 11)

    def test_rejects_p_dividing_a(self):
        with pytest.raises(ValueError):
            residue_rule(3, 3)
        with pytest.raises(ValueError):
            residue_rule(6, 3)
        with pytest.raises(ValueError):
            residue_rule(5, 5)


class TestDiscreteLog:
    def test_log_of_one_is_zero(self):
        assert discrete_log(2, 1, 11) == 0
        assert discrete_log(17, 1, 8191) == 0

    def test_known_cycle_position(self):
        # 5 = 2**4 in the cycle (1, 2, 4, 8, 5, 10, 9, 7, 3, 6) mod 11
        assert discrete_log(2, 5, 11) == 4

    def test_round_trips_pow(self):
        for p in odd_primes_below(200):
            g = smallest_primitive_root(p)
            for a in range(1, p):
                assert pow(g, discrete_log(g, a, p), p) == a

    def test_orbit_exhaustion_raises(self):
        # 3 has order 5 mod 11; 2 is outside its orbit
        with pytest.raises(ValueError):
            discrete_log(3, 2, 11)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            discrete_log(2, 0, 11)
        with pytest.raises(ValueError):
            discrete_log(0, 1, 11)


class TestSqrtMod:
    def test_root_of_one(self):
        for p in (5, 11, 8191):
            assert sqrt_mod(1, p, smallest_primitive_root(p)) == 1

    def test_root_of_two_mod_8191(self):
        assert sqrt_mod(2, 8191, smallest_primitive_root(8191)) == 128

    def test_squaring_round_trip(self):
        for p in odd_primes_below(200):
            g = smallest_primitive_root(p)
            for r in range(1, p):
                root = sqrt_mod(r * r % p, p, g)
                assert root == min(r, p - r)

    def test_nonresidue_gives_none(self):
        for p in odd_primes_below(100):
            g = smallest_primitive_root(p)
            squares = brute_squares(p)
            for a in range(1, p):
                root = sqrt_mod(a, p, g)
                if a in squares:
                    assert root is not None
                    assert root * root % p == a
                    assert root <= (p - 1) // 2
                else:
                    assert root is None

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            sqrt_mod(0, 11, 2)
