"""
Unit tests for exact rational polynomials, resultants and real roots.
"""

from fractions import Fraction

import pytest
import sympy as sp

from src.models import CertificationError
from src.polyq import (
    IsolatingInterval,
    PolyQ,
    X,
    discriminant,
    isolate_real_roots,
    rational_roots,
    refine,
    resultant,
    sturm_chain,
    sturm_count,
    sylvester_resultant_polycoeff,
)

SYMBOL = sp.Symbol("x")


def random_poly(rng, max_degree=5):
    degree = rng.randint(1, max_degree)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)))
    return PolyQ(coeffs)


def sylvester_determinant(a, b):
    """det of the Sylvester matrix of a and b as a sympy Rational."""
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([0] * shift + [sp.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)]
                    + [0] * (size - m - 1 - shift))
    for shift in range(m):
        rows.append([0] * shift + [sp.Rational(c.numerator, c.denominator) for c in reversed(b.coeffs)]
                    + [0] * (size - n - 1 - shift))
    return sp.Rational(sp.Matrix(rows).det())


@pytest.mark.unit
class TestPolyArithmetic:
    """Test the ring operations of PolyQ."""

    def test_trimmed_and_degree(self):
        """Test that trailing zeros are dropped and zero has degree -1."""
        assert PolyQ([1, 2, 0, 0]).degree == 1
        assert PolyQ([0, 0]).is_zero
        assert PolyQ().degree == -1

    def test_multiplication_and_str(self):
        """Test (X - 1)(X + 1) = X^2 - 1."""
        product = (X - 1) * (X + 1)
        assert product == PolyQ([-1, 0, 1])
        assert str(product) == "X^2 - 1"
        assert str(PolyQ([Fraction(1, 2), 0, -3])) == "-3*X^2 + 1/2"

    def test_divmod(self):
        """Test Euclidean division."""
        quotient, remainder = PolyQ([1, 0, 0, 1]).divmod(X + 2)
        assert quotient == X ** 2 - 2 * X + 4
        assert remainder == PolyQ([-7])
        assert quotient * (X + 2) + remainder == PolyQ([1, 0, 0, 1])

    def test_divide_by_zero(self):
        """Test that dividing by zero raises DIVISION_BY_ZERO_POLY."""
        with pytest.raises(CertificationError) as exc_info:
            (X + 1).divmod(PolyQ())
        assert exc_info.value.code == "DIVISION_BY_ZERO_POLY"

    def test_evaluation_and_derivative(self):
        """Test Horner evaluation and differentiation."""
        p = X ** 3 - 2 * X + 1
        assert p(Fraction(1, 2)) == Fraction(1, 8)
        assert p.derivative() == 3 * X ** 2 - 2

    def test_gcd_and_xgcd(self):
        """Test monic gcd and the Bezout identity."""
        a = (X - 1) * (X - 2)
        b = (X - 1) * (X + 3)
        assert a.gcd(b) == X - 1
        g, s, t = a.xgcd(b)
        assert g == X - 1
        assert s * a + t * b == g

    def test_content_and_primitive(self):
        """Test content extraction keeps the sign."""
        p = PolyQ([Fraction(1, 2), Fraction(-3, 4)])
        assert p.content() == Fraction(1, 4)
        assert p.primitive() == PolyQ([2, -3])
        assert p.integer_coeffs() == [2, -3]

    def test_compose_and_reciprocal(self):
        """Test composition and coefficient reversal."""
        assert (X ** 2 + 1).compose(X + 1) == X ** 2 + 2 * X + 2
        assert PolyQ([1, 2, 3]).reciprocal() == PolyQ([3, 2, 1])

    def test_squarefree_part(self):
        """Test removal of repeated factors."""
        p = (X - 1) ** 2 * (X + 2)
        assert not p.is_squarefree()
        assert p.squarefree_part() == (X - 1) * (X + 2)

    def test_abs_bound(self):
        """Test the coefficient bound on a disc."""
        assert (X ** 2 - 3 * X + 1).abs_bound(Fraction(2)) == 4 + 6 + 1

    def test_string_round_trip(self):
        """Test the "p/q" certificate form."""
        p = PolyQ([Fraction(-1149, 961), Fraction(63, 31), 1])
        assert p.to_strings() == ["-1149/961", "63/31", "1"]
        assert PolyQ.from_strings(p.to_strings()) == p


@pytest.mark.unit
class TestResultant:
    """Test scalar and polynomial-coefficient resultants."""

    def test_resultant_known_values(self):
        """Test hand-checked resultants."""
        assert resultant(X ** 2 - 1, X - 2) == 3
        assert resultant(X ** 2, X ** 2 + 1) == 1
        assert resultant(X ** 3, X - 1) == -1

    def test_resultant_of_linears(self):
        """Test res(X - a, X - b) = a - b."""
        assert resultant(X - 3, X - 7) == -4
        assert resultant(X - Fraction(1, 2), X + 1) == Fraction(3, 2)

    def test_resultant_constants(self):
        """Test constant arguments."""
        assert resultant(PolyQ([3]), X ** 2 + 1) == 9
        assert resultant(X ** 3 + 1, PolyQ([2])) == 8

    def test_resultant_zero_inputs(self):
        """Test one zero argument gives 0, two raise BOTH_ZERO."""
        assert resultant(PolyQ(), X + 1) == 0
        with pytest.raises(CertificationError) as exc_info:
            resultant(PolyQ(), PolyQ())
        assert exc_info.value.code == "BOTH_ZERO"

    def test_resultant_common_root(self):
        """Test that a shared root gives 0."""
        assert resultant((X - 1) * (X + 2), (X - 1) * (X ** 2 + 1)) == 0

    def test_resultant_matches_sylvester_determinant(self, rng):
        """Test against the determinant of the Sylvester matrix, computed by sympy."""
        for _ in range(40):
            a, b = random_poly(rng), random_poly(rng)
            expected = sylvester_determinant(a, b)
            assert resultant(a, b) == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))

    def test_resultant_swap_sign(self, rng):
        """Test res(a, b) = (-1)^(deg a * deg b) res(b, a)."""
        assert resultant(PolyQ([Fraction(5, 4), Fraction(1, 2)]), X ** 5 + 1) == -resultant(
            X ** 5 + 1, PolyQ([Fraction(5, 4), Fraction(1, 2)])
        )
        for _ in range(40):
            a, b = random_poly(rng), random_poly(rng)
            sign = (-1) ** (a.degree * b.degree)
            assert resultant(a, b) == sign * resultant(b, a)

    def test_resultant_is_multiplicative(self, rng):
        """Test res(a, b * c) = res(a, b) * res(a, c)."""
        for _ in range(30):
            a, b, c = random_poly(rng, 4), random_poly(rng, 4), random_poly(rng, 4)
            assert resultant(a, b * c) == resultant(a, b) * resultant(a, c)

    def test_sylvester_polycoeff(self):
        """Test res_Y(Y - X, Y + X) = 2X."""
        assert sylvester_resultant_polycoeff([-X, PolyQ([1])], [X, PolyQ([1])]) == 2 * X

    def test_sylvester_polycoeff_agrees_with_scalar(self):
        """Test constant coefficients reproduce the scalar resultant."""
        a = [PolyQ([-1]), PolyQ(), PolyQ([1])]
        b = [PolyQ([-2]), PolyQ([1])]
        assert sylvester_resultant_polycoeff(a, b) == PolyQ([3])

    def test_sylvester_polycoeff_agrees_after_substitution(self, rng):
        """Test that evaluating res_Y at a rational x matches the scalar resultant there."""
        a = [X ** 2 + 1, 3 * X - 2, PolyQ([Fraction(1, 2)]), PolyQ([1])]
        b = [X - Fraction(5, 4), X ** 3, PolyQ([2])]
        res_y = sylvester_resultant_polycoeff(a, b)
        for _ in range(10):
            x0 = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            scalar = resultant(PolyQ(c(x0) for c in a), PolyQ(c(x0) for c in b))
            assert res_y(x0) == scalar

    def test_sylvester_polycoeff_zero(self):
        """Test zero arguments."""
        assert sylvester_resultant_polycoeff([], [X]).is_zero
        with pytest.raises(CertificationError) as exc_info:
            sylvester_resultant_polycoeff([PolyQ()], [])
        assert exc_info.value.code == "BOTH_ZERO"


@pytest.mark.unit
class TestDiscriminant:
    """Test discriminants."""

    def test_quadratic_and_cubic(self):
        """Test b^2 - 4c and -4p^3 - 27q^2."""
        assert discriminant(X ** 2 - 3 * X + 2) == 1
        assert discriminant(X ** 3 - X) == 4
        assert discriminant(2 * X + 5) == 1

    def test_degree_too_small(self):
        """Test that constants raise DEGREE_TOO_SMALL."""
        with pytest.raises(CertificationError) as exc_info:
            discriminant(PolyQ([5]))
        assert exc_info.value.code == "DEGREE_TOO_SMALL"

    def test_zero_exactly_when_repeated_factor(self, rng):
        """Test discriminant(p) = 0 iff gcd(p, p') is nonconstant, in both directions."""
        for _ in range(20):
            base = random_poly(rng, 3)
            repeated = base * base * (X - rng.randint(-5, 5))
            assert discriminant(repeated) == 0
            assert repeated.gcd(repeated.derivative()).degree >= 1
        for _ in range(30):
            p = random_poly(rng, 5)
            if p.degree < 2:
                continue
            assert (discriminant(p) == 0) == (p.gcd(p.derivative()).degree >= 1)
        p = X ** 3 - 2
        assert discriminant(p) != 0
        assert p.gcd(p.derivative()).degree == 0

    def test_matches_sympy(self, rng, to_sympy):
        """Test against sympy on a seeded sample."""
        for _ in range(30):
            p = random_poly(rng)
            if p.degree < 2:
                continue
            expected = sp.discriminant(to_sympy(p).as_expr(), SYMBOL)
            assert discriminant(p) == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))


@pytest.mark.unit
class TestSturm:
    """Test Sturm chains and root counting."""

    def test_counts_over_whole_line(self):
        """Test counts with infinite endpoints."""
        assert sturm_count(X ** 2 - 2) == 2
        assert sturm_count(X ** 2 + 1) == 0
        assert sturm_count(X ** 3 - X) == 3

    def test_half_open_interval(self):
        """Test that (lo, hi] excludes lo and includes hi."""
        assert sturm_count(X ** 2 - 1, Fraction(-1), Fraction(1)) == 1
        assert sturm_count(X ** 2 - 1, Fraction(-2), Fraction(-1)) == 1
        assert sturm_count(X ** 2 - 2, 0, None) == 1
        assert sturm_count(X ** 2 - 2, None, 0) == 1

    def test_not_squarefree(self):
        """Test that repeated roots raise NOT_SQUAREFREE."""
        with pytest.raises(CertificationError) as exc_info:
            sturm_chain((X - 1) ** 2)
        assert exc_info.value.code == "NOT_SQUAREFREE"

    def test_zero_polynomial(self):
        """Test ZERO_POLYNOMIAL."""
        with pytest.raises(CertificationError) as exc_info:
            sturm_count(PolyQ())
        assert exc_info.value.code == "ZERO_POLYNOMIAL"

    def test_invalid_interval(self):
        """Test lo >= hi raises INVALID_INTERVAL."""
        with pytest.raises(CertificationError) as exc_info:
            sturm_count(X ** 2 - 2, 1, 1)
        assert exc_info.value.code == "INVALID_INTERVAL"

    def test_matches_sympy(self, rng, to_sympy):
        """Test real-root counts against sympy."""
        for _ in range(30):
            p = random_poly(rng, max_degree=6).squarefree_part()
            assert sturm_count(p) == to_sympy(p).count_roots()


@pytest.mark.unit
class TestIsolation:
    """Test isolation, refinement and rational roots."""

    def test_isolate_cubic(self):
        """Test one ascending interval per root of X^3 - X."""
        intervals = isolate_real_roots(X ** 3 - X)
        assert len(intervals) == 3
        for interval, root in zip(intervals, (-1, 0, 1)):
            assert interval.contains(root)

    def test_isolate_sign_change(self):
        """Test that each interval brackets a sign change."""
        p = X ** 4 - 10 * X ** 2 + 1
        intervals = isolate_real_roots(p)
        assert len(intervals) == 4
        for interval in intervals:
            assert p(interval.lo) * p(interval.hi) <= 0
            assert sturm_count(p, interval.lo, interval.hi) == 1

    def test_no_real_roots(self):
        """Test an empty result."""
        assert isolate_real_roots(X ** 2 + 1) == []

    def test_isolation_matches_sturm_count(self, rng):
        """Test one interval per root counted by the Sturm chain over the whole line."""
        for _ in range(30):
            p = random_poly(rng, max_degree=7).squarefree_part()
            intervals = isolate_real_roots(p)
            assert len(intervals) == sturm_count(p)
            for left, right in zip(intervals, intervals[1:]):
                assert left.hi <= right.lo

    def test_refine_sqrt_two(self):
        """Test refinement keeps the root and meets the width."""
        positive = isolate_real_roots(X ** 2 - 2)[1]
        refined = refine(positive, Fraction(1, 10 ** 6))
        assert refined.width <= Fraction(1, 10 ** 6)
        assert refined.lo ** 2 < 2 < refined.hi ** 2

    def test_refine_hits_rational_root(self):
        """Test refinement of an exactly representable root."""
        p = (X - Fraction(1, 2)) * (X + 3)
        interval = [iv for iv in isolate_real_roots(p) if iv.contains(Fraction(1, 2))][0]
        refined = refine(interval, Fraction(1, 1000))
        assert refined.contains(Fraction(1, 2))
        assert refined.width <= Fraction(1, 1000)

    def test_refine_wide_enough_is_unchanged(self):
        """Test an interval already narrow enough is returned as is."""
        interval = IsolatingInterval(Fraction(1), Fraction(2), X ** 2 - 2)
        assert refine(interval, Fraction(2)) is interval

    def test_refine_invalid_width(self):
        """Test a non-positive width."""
        interval = IsolatingInterval(Fraction(1), Fraction(2), X ** 2 - 2)
        with pytest.raises(CertificationError) as exc_info:
            refine(interval, 0)
        assert exc_info.value.code == "INVALID_INTERVAL"

    def test_interval_invariant(self):
        """Test lo < hi is enforced."""
        with pytest.raises(CertificationError) as exc_info:
            IsolatingInterval(Fraction(2), Fraction(1), X)
        assert exc_info.value.code == "INVALID_INTERVAL"

    def test_rational_roots(self):
        """Test rational roots with multiplicity."""
        assert rational_roots(X ** 2 - 1) == [-1, 1]
        assert rational_roots((X - Fraction(1, 2)) ** 2 * (X + 3)) == [-3, Fraction(1, 2), Fraction(1, 2)]
        assert rational_roots(X ** 3) == [0, 0, 0]
        assert rational_roots(X ** 2 + 1) == []
        assert rational_roots(PolyQ([5])) == []

    def test_rational_roots_zero(self):
        """Test ZERO_POLYNOMIAL."""
        with pytest.raises(CertificationError) as exc_info:
            rational_roots(PolyQ())
        assert exc_info.value.code == "ZERO_POLYNOMIAL"
