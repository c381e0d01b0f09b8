"""
Unit tests for data models.

Tests the records that flow between the certification modules.
"""

from fractions import Fraction

import pytest

from src.models import (
    CertificationError,
    CertifyOptions,
    CliConfig,
    DegreePattern,
    Factorization,
    FieldSearchResult,
    IrreducibilityVerdict,
    SearchHit,
)


@pytest.mark.unit
class TestCertificationError:
    """Test the CertificationError exception."""

    def test_create_error_with_details(self):
        """Test creating an error with a code, message and witness details."""
        error = CertificationError(
            code="NOT_INVERTIBLE",
            message="element shares a factor with the modulus",
            details={"gcd": "X + 1"},
        )

        assert error.code == "NOT_INVERTIBLE"
        assert error.details["gcd"] == "X + 1"
        assert str(error) == (
            "[NOT_INVERTIBLE] element shares a factor with the modulus | "
            "Details: {'gcd': 'X + 1'}"
        )

    def test_error_without_details(self):
        """Test the string form without details."""
        error = CertificationError(code="ZERO_CONIC", message="all conic coefficients are zero")
        assert str(error) == "[ZERO_CONIC] all conic coefficients are zero"

    def test_error_can_be_raised(self):
        """Test that CertificationError behaves as an exception."""
        with pytest.raises(CertificationError) as exc_info:
            raise CertificationError(code="BAD_PRIME", message="31 divides a denominator")
        assert exc_info.value.code == "BAD_PRIME"


@pytest.mark.unit
class TestFactorData:
    """Test Factorization and DegreePattern."""

    def test_factorization_value(self):
        """Test reassembly and printing."""
        factorization = Factorization(pairs=((2, 6), (3, 1)))
        assert factorization.value == 192
        assert factorization.primes == (2, 3)
        assert str(factorization) == "2^6 * 3"

    def test_pattern_is_sorted(self):
        """Test that degrees are stored in ascending order."""
        pattern = DegreePattern((3, 1, 2))
        assert pattern.degrees == (1, 2, 3)
        assert pattern.total == 6
        assert str(pattern) == "{1,2,3}"

    def test_pattern_subset_sums(self):
        """Test proper subset sums of {1,2,3}."""
        assert DegreePattern((1, 2, 3)).subset_sums() == frozenset({1, 2, 3, 4, 5})


@pytest.mark.unit
class TestOptionsAndConfig:
    """Test run options and CLI configuration."""

    def test_default_options(self):
        """Test the defaults of CertifyOptions."""
        options = CertifyOptions()
        assert options.sieve_prime_bound == 200
        assert options.pattern_primes == 20
        assert options.include_points is False
        assert options.precision == Fraction(1, 10 ** 6)

    def test_options_from_env_defaults(self, monkeypatch):
        """Test from_env without variables set."""
        monkeypatch.delenv("SIEVE_PRIME_BOUND", raising=False)
        monkeypatch.delenv("PATTERN_PRIMES", raising=False)
        assert CertifyOptions.from_env() == CertifyOptions()

    def test_valid_config(self):
        """Test that a complete certify config validates."""
        CliConfig(subcommand="certify", t="5/2").validate()
        CliConfig(subcommand="search").validate()

    @pytest.mark.parametrize("config", [
        CliConfig(subcommand="points"),
        CliConfig(subcommand="certify", t="5/2", precision=0),
        CliConfig(subcommand="isolate-r", digits=0),
        CliConfig(subcommand="certify", t="5/2", output_format="pdf"),
    ])
    def test_invalid_config(self, config):
        """Test INVALID_ARGUMENT for each violated invariant."""
        with pytest.raises(CertificationError) as exc_info:
            config.validate()
        assert exc_info.value.code == "INVALID_ARGUMENT"


@pytest.mark.unit
class TestVerdictsAndResults:
    """Test verdict helpers and search aggregation."""

    def test_irreducibility_verdict(self):
        """Test is_irreducible for each status."""
        assert IrreducibilityVerdict(status="irreducible", witness_primes=(2, 3)).is_irreducible
        assert not IrreducibilityVerdict(status="inconclusive").is_irreducible

    def test_certificate_failed_checks(self, service):
        """Test that only checks set to False are reported."""
        cert = service.certify("5/2")
        assert cert.failed_checks() == []
        cert.fermat_ok = False
        cert.six_roots_ok = None
        assert cert.failed_checks() == ["fermat_ok"]
        assert not cert.all_checks_pass
        assert "kernel=753" in str(cert)

    def test_representatives_keep_first_t(self, service):
        """Test that the first t of each kernel represents it."""
        cert = service.certify("5/2")
        result = FieldSearchResult(height_bound=4, hits=[
            SearchHit(t=Fraction(9, 4), kernel=86473, certificate=cert),
            SearchHit(t=Fraction(5, 2), kernel=753, certificate=cert),
            SearchHit(t=Fraction(11, 4), kernel=753, certificate=cert),
        ])
        assert result.representatives == {86473: Fraction(9, 4), 753: Fraction(5, 2)}
        assert result.distinct_kernel_count == 2
