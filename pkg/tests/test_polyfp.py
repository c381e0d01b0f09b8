"""
Unit tests for polynomials over F_p and the distinct-degree sieve.
"""

from fractions import Fraction

import pytest

from src.models import CertificationError, DegreePattern
from src.polyfp import MAX_PRIME, PolyFp, collect_degree_patterns, degree_pattern, reduce_mod_p
from src.polyq import PolyQ, X


@pytest.mark.unit
class TestPolyFpArithmetic:
    """Test ring operations in F_p[X]."""

    def test_coefficients_reduced(self):
        """Test that coefficients land in [0, p) and zeros are trimmed."""
        assert PolyFp([-1, 7, 5], 5).coeffs == (4, 2)

    def test_multiply_and_divide(self):
        """Test (X + 1)(X + 2) over F_5 and division back."""
        a = PolyFp([1, 1], 5)
        b = PolyFp([2, 1], 5)
        product = a * b
        assert product.coeffs == (2, 3, 1)
        quotient, remainder = product.divmod(b)
        assert quotient == a
        assert remainder.is_zero

    def test_divide_by_zero(self):
        """Test DIVISION_BY_ZERO_POLY."""
        with pytest.raises(CertificationError) as exc_info:
            PolyFp([1, 1], 5).divmod(PolyFp([], 5))
        assert exc_info.value.code == "DIVISION_BY_ZERO_POLY"

    def test_mixed_primes(self):
        """Test that operands over different primes raise CONTEXT_MISMATCH."""
        with pytest.raises(CertificationError) as exc_info:
            PolyFp([1], 3) + PolyFp([1], 5)
        assert exc_info.value.code == "CONTEXT_MISMATCH"

    def test_powmod(self):
        """Test X^5 = X modulo X^2 + 1 over F_3."""
        modulus = PolyFp([1, 0, 1], 3)
        assert PolyFp.x(3).powmod(5, modulus) == PolyFp.x(3)
        assert PolyFp.x(3).powmod(0, modulus) == PolyFp([1], 3)

    def test_gcd_is_monic(self):
        """Test the gcd of (X+1)(X+2) and 2(X+1) over F_5."""
        a = PolyFp([2, 3, 1], 5)
        b = PolyFp([2, 2], 5)
        assert a.gcd(b) == PolyFp([1, 1], 5)

    def test_evaluation(self):
        """Test evaluation at a field element."""
        assert PolyFp([1, 0, 1], 5)(2) == 0


@pytest.mark.unit
class TestReduction:
    """Test reduction of rational polynomials modulo p."""

    def test_reduces_fractions(self):
        """Test that 1/2 maps to the inverse of 2."""
        assert reduce_mod_p(PolyQ([Fraction(1, 2), 1]), 7).coeffs == (4, 1)

    def test_denominator_prime_is_bad(self, params_5_2):
        """Test that 31 divides a denominator of f_{5/2}."""
        with pytest.raises(CertificationError) as exc_info:
            reduce_mod_p(params_5_2.f_t, 31)
        assert exc_info.value.code == "BAD_PRIME"

    def test_two_is_good_for_golden_parameter(self, params_5_2):
        """Test that reduction mod 2 succeeds at t = 5/2."""
        assert reduce_mod_p(params_5_2.f_t, 2).degree == 6

    @pytest.mark.parametrize("p", [4, 1, MAX_PRIME, 2 ** 89 - 1])
    def test_not_an_admissible_prime(self, p):
        """Test composites and primes at or above 2^61."""
        with pytest.raises(CertificationError) as exc_info:
            reduce_mod_p(X + 1, p)
        assert exc_info.value.code == "BAD_PRIME"

    def test_leading_coefficient_vanishes(self):
        """Test that a prime dividing the leading coefficient is bad."""
        with pytest.raises(CertificationError) as exc_info:
            reduce_mod_p(3 * X ** 2 + 1, 3)
        assert exc_info.value.code == "BAD_PRIME"

    def test_zero_polynomial(self):
        """Test ZERO_POLYNOMIAL."""
        with pytest.raises(CertificationError) as exc_info:
            reduce_mod_p(PolyQ(), 5)
        assert exc_info.value.code == "ZERO_POLYNOMIAL"


@pytest.mark.unit
class TestDegreePattern:
    """Test distinct-degree factorization patterns."""

    def test_sum_of_squares(self):
        """Test X^2 + 1: irreducible mod 3, split mod 5."""
        assert degree_pattern(reduce_mod_p(X ** 2 + 1, 3)) == DegreePattern((2,))
        assert degree_pattern(reduce_mod_p(X ** 2 + 1, 5)) == DegreePattern((1, 1))

    def test_cube_root_of_two(self):
        """Test that X^3 - 2 stays irreducible mod 7."""
        assert degree_pattern(reduce_mod_p(X ** 3 - 2, 7)) == DegreePattern((3,))

    def test_mixed_degrees(self):
        """Test (X^2 + 1)(X - 1) mod 3 gives {1,2}."""
        f = (X ** 2 + 1) * (X - 1)
        assert degree_pattern(reduce_mod_p(f, 3)).degrees == (1, 2)

    def test_golden_parameter_mod_two(self, params_5_2):
        """Test f_{5/2} mod 2 is the 7th cyclotomic polynomial, pattern {3,3}."""
        reduced = reduce_mod_p(params_5_2.f_t, 2)
        assert reduced == PolyFp([1] * 7, 2)
        assert degree_pattern(reduced) == DegreePattern((3, 3))

    def test_repeated_factor(self):
        """Test that (X + 1)^2 mod 5 raises NOT_SQUAREFREE_MOD_P."""
        with pytest.raises(CertificationError) as exc_info:
            degree_pattern(reduce_mod_p((X + 1) ** 2, 5))
        assert exc_info.value.code == "NOT_SQUAREFREE_MOD_P"

    def test_subset_sums(self):
        """Test the proper factor degrees a pattern allows."""
        assert DegreePattern((3, 3)).subset_sums() == frozenset({3})
        assert DegreePattern((2, 2, 2)).subset_sums() == frozenset({2, 4})
        assert DegreePattern((6,)).subset_sums() == frozenset()

    def test_collect_skips_bad_primes(self, params_5_2):
        """Test that 31 is skipped and the limit is honoured."""
        patterns = collect_degree_patterns(params_5_2.f_t, [2, 3, 5, 7, 11, 13, 31, 37])
        primes = [p for p, _ in patterns]
        assert 31 not in primes
        assert 2 in primes
        assert all(pattern.total == 6 for _, pattern in patterns)
        assert len(collect_degree_patterns(params_5_2.f_t, [2, 3, 5, 7, 11], limit=1)) == 1

    def test_scalar_multiples_share_pattern(self, rng):
        """Test that nonzero scalar multiples have the same degree pattern."""
        f = (X + 3) * (X ** 2 + 1) * (X ** 3 - 2)
        for _ in range(10):
            c = Fraction(rng.randint(1, 6), rng.randint(1, 6))
            assert degree_pattern(reduce_mod_p(c * f, 7)) == DegreePattern((1, 2, 3))

    @pytest.mark.parametrize("p, factors, degrees", [
        (7, [X + 3, X ** 2 + 1, X ** 3 - 2], (1, 2, 3)),
        (3, [X, X ** 2 + 1, X ** 3 - X + 1], (1, 2, 3)),
        (3, [X ** 2 + 1, X ** 2 + X + 2, X ** 2 + 2 * X + 2], (2, 2, 2)),
        (2, [X ** 3 + X + 1, X ** 3 + X ** 2 + 1], (3, 3)),
        (5, [X - k for k in range(5)], (1, 1, 1, 1, 1)),
    ])
    def test_products_of_irreducibles(self, rng, p, factors, degrees):
        """Test that a product of distinct irreducibles, in any order, gives their degrees."""
        order = list(factors)
        rng.shuffle(order)
        f = PolyQ([1])
        for factor in order:
            f = f * factor
        assert degree_pattern(reduce_mod_p(f, p)) == DegreePattern(degrees)
