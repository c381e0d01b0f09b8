"""
Certificate service: runs every check for one parameter and searches for distinct fields.

This module is the orchestration layer between the exact algorithms in
src.quintic and the command-line front end.
"""

from fractions import Fraction
from math import ceil
from typing import List, Optional, Union

from src.arith import parse_rational, primes_up_to
from src.logging_config import LogContext, get_logger, log_performance
from src.models import (
    Certificate,
    CertificationError,
    CertifyOptions,
    FieldSearchResult,
    SearchHit,
)
from src.polyfp import collect_degree_patterns
from src.polyq import IsolatingInterval
from src import quintic

logger = get_logger(__name__)

# Smallest height bound whose candidate set the search enumerates.
SEARCH_FLOOR = 3


class CertificateService:
    """Service for certifying parameters t and comparing the resulting fields."""

    def __init__(self, options: Optional[CertifyOptions] = None):
        """
        Initialize the certificate service.

        Args:
            options: Run configuration; defaults come from the environment
        """
        self.options = options or CertifyOptions.from_env()

    @log_performance(logger)
    def certify(self, t: Union[str, Fraction, int]) -> Certificate:
        """
        Build the full certificate for one parameter.

        Args:
            t: The parameter, as "p/q" text or a rational

        Returns:
            Certificate with every applicable check filled in

        Raises:
            CertificationError: INVALID_RATIONAL for malformed text,
                DEGENERATE_PARAMETER for t = 2, CERTIFICATION_FAILED if an
                unexpected error escapes the arithmetic
        """
        t = parse_rational(t)
        with LogContext(logger, "Certify parameter", t=str(t)):
            try:
                return self._certify(t)
            except CertificationError:
                raise
            except Exception as e:
                raise CertificationError(
                    code="CERTIFICATION_FAILED",
                    message=f"Certification failed: {str(e)}",
                    details={"t": str(t), "original_error": str(e)},
                ) from e

    def _certify(self, t: Fraction) -> Certificate:
        pd = quintic.build_params(t)
        cert = Certificate(
            param=pd,
            irreducible=quintic.certify_irreducible(pd, self.options.sieve_prime_bound),
            cyclotomic_remainder=quintic.cyclotomic_remainder(pd),
            cyclotomic_remainder_ok=quintic.cyclotomic_remainder_matches(pd),
            resultant_identity_ok=quintic.check_resultant_identity(pd),
            no_points_at_infinity=quintic.no_points_at_infinity(pd),
            quad_kernel=quintic.quad_kernel(pd),
        )

        if pd.is_degenerate:
            cert.base_point_ok = quintic.base_point_ok(pd)
            if pd.f_t == quintic.CYCLOTOMIC ** 3:
                cert.notes.append("f_t = (X^2+X+1)^3; K_1 = Q(zeta_3) = Q(sqrt(-3))")
            else:
                cert.base_point_ok = False
            logger.info("degenerate parameter certified", extra={"t": str(t)})
            return cert

        ctx = quintic.field_context(pd)
        roots = quintic.six_roots(pd, ctx)
        alpha, beta = roots[0], roots[1]
        cert.six_roots_ok = quintic.six_root_factorization_ok(pd, ctx, roots)
        cert.fermat_ok = quintic.verify_fermat_point(alpha, beta)
        cert.conic_ok = quintic.verify_conic_point(pd, alpha, beta)

        points = quintic.orbit_points(pd, ctx)
        cert.orbit_ok = quintic.orbit_points_ok(pd, points)
        cert.recover_parameter_ok = all(
            quintic.recover_parameter(point.x, point.y) == t for point in points
        )
        cert.trace_cubic_ok = quintic.trace_cubic_ok(pd, ctx)
        cert.galois_witness_ok = quintic.galois_non_cyclic_witness(pd, ctx)
        cert.totally_real = quintic.totally_real_verdict(pd)

        if cert.irreducible.is_irreducible and cert.six_roots_ok:
            cert.galois_s3 = quintic.galois_s3_verdict(pd, cert.irreducible, cert.six_roots_ok)
        else:
            cert.notes.append("Galois group not certified: prerequisites failed")

        cert.degree_patterns = tuple(collect_degree_patterns(
            pd.f_t,
            primes_up_to(max(self.options.sieve_prime_bound, 2)),
            limit=self.options.pattern_primes,
        ))
        if not quintic.degree_patterns_allowed(cert.degree_patterns):
            cert.notes.append("a degree pattern outside {1^6}, {2,2,2}, {3,3} was observed")

        if self.options.include_points and cert.totally_real.verdict:
            cert.points = quintic.numeric_points(pd, self.options.precision)

        if cert.all_checks_pass:
            logger.info(f"all checks pass, kernel {cert.quad_kernel}", extra={"t": str(t)})
        else:
            logger.error(f"failed checks: {cert.failed_checks()}", extra={"t": str(t)})
        return cert

    def numeric_points(self, t: Union[str, Fraction, int]):
        """
        Six refined real points for a totally real parameter.

        Raises:
            CertificationError: NOT_TOTALLY_REAL outside (2, r)
        """
        pd = quintic.build_params(parse_rational(t))
        return quintic.numeric_points(pd, self.options.precision)

    def candidates(self, height_bound: int) -> List[Fraction]:
        """Rationals p/q in lowest terms with q <= height_bound and 2 < p/q < r, ascending."""
        found = set()
        for q in range(1, height_bound + 1):
            for p in range(2 * q + 1, ceil(Fraction(26, 10) * q) + 1):
                t = Fraction(p, q)
                if t.denominator == q and quintic.in_totally_real_range(t):
                    found.add(t)
        return sorted(found)

    def search_distinct_fields(self, height_bound: int) -> FieldSearchResult:
        """
        Certify every admissible t up to the height bound, grouped by kernel.

        Args:
            height_bound: Largest denominator scanned

        Returns:
            FieldSearchResult with hits in ascending t; bounds below the search
            floor give an empty result
        """
        result = FieldSearchResult(height_bound=height_bound)
        if height_bound < SEARCH_FLOOR:
            logger.warning(
                f"height bound {height_bound} is below {SEARCH_FLOOR}; nothing to search",
                extra={"height": height_bound},
            )
            return result

        with LogContext(logger, "Search distinct fields", height=height_bound):
            for t in self.candidates(height_bound):
                cert = self.certify(t)
                result.hits.append(SearchHit(t=t, kernel=cert.quad_kernel, certificate=cert))
            logger.info(
                f"{len(result.hits)} admissible parameters, "
                f"{result.distinct_kernel_count} distinct kernels",
                extra={"height": height_bound},
            )
        return result

    def isolate_r(self, digits: int) -> IsolatingInterval:
        """
        Enclosure of r narrow enough for ``digits`` decimal places.

        Raises:
            CertificationError: INVALID_ARGUMENT if digits < 1
        """
        if digits < 1:
            raise CertificationError(
                code="INVALID_ARGUMENT",
                message="digits must be at least 1",
                details={"digits": digits},
            )
        return quintic.isolate_r(Fraction(1, 10 ** (digits + 2)))
