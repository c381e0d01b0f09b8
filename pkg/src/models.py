"""
Domain records for the Fermat quintic certification pipeline.

The arithmetic types (PolyQ, PolyFp, NFElement) live next to their algorithms.
This module holds the plain records that flow between them:

1. CertificationError - the single coded exception every module raises
2. Factorization / DegreePattern - integer and mod-p factor data
3. ParamData - everything derived from the parameter t
4. Verdicts - what the individual checks return
5. Certificate - the aggregate verification record for one t
6. Options - configuration for a run (environment and command line)
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from src.polyq import PolyQ


# ============================================================================
# ERRORS
# ============================================================================

@dataclass
class CertificationError(Exception):
    """
    Custom exception for every arithmetic and certification failure.

    The ``code`` is machine-readable (upper snake case) and stable; callers and
    tests branch on it. ``details`` carries witnesses, e.g. the nontrivial gcd
    found while inverting in a quotient ring.

    Codes in use:
        ZERO_INPUT, INPUT_TOO_SMALL, INVALID_RATIONAL, INVALID_ARGUMENT,
        DIVISION_BY_ZERO_POLY, BOTH_ZERO, DEGREE_TOO_SMALL, NOT_SQUAREFREE,
        ZERO_POLYNOMIAL, INVALID_INTERVAL, BAD_PRIME, NOT_SQUAREFREE_MOD_P,
        CONTEXT_MISMATCH, NOT_INVERTIBLE, DEGENERATE_PARAMETER,
        SEPARABILITY_FAILURE, PHI_UNDEFINED, NON_RATIONAL_VALUE, ZERO_CONIC,
        ORACLE_DISAGREEMENT, PREREQUISITE_MISSING, ZERO_DISCRIMINANT,
        NOT_TOTALLY_REAL, DIVISION_NOT_EXACT, CERTIFICATION_FAILED

    Example:
        >>> raise CertificationError(
        ...     code="DEGENERATE_PARAMETER",
        ...     message="t = 2 makes the denominators of u, v, w vanish",
        ...     details={"t": "2"},
        ... )
    """

    code: str
    message: str
    details: Optional[Dict[str, Any]] = None

    def __str__(self) -> str:
        error_str = f"[{self.code}] {self.message}"
        if self.details:
            error_str += f" | Details: {self.details}"
        return error_str


# ============================================================================
# FACTOR DATA
# ============================================================================

@dataclass(frozen=True)
class Factorization:
    """
    Complete prime factorization of an integer n >= 2.

    ``pairs`` holds (prime, exponent) with strictly increasing primes.
    """

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        """The integer this factorization reassembles to."""
        n = 1
        for prime, exponent in self.pairs:
            n *= prime ** exponent
        return n

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.pairs)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def __str__(self) -> str:
        return " * ".join(
            f"{prime}^{exponent}" if exponent > 1 else str(prime)
            for prime, exponent in self.pairs
        )


@dataclass(frozen=True)
class DegreePattern:
    """
    Degrees of the irreducible factors of a squarefree polynomial mod p.

    A rational factor of degree k can only exist if k is a sum of a
    sub-multiset of every pattern observed at a good prime.
    """

    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def subset_sums(self) -> FrozenSet[int]:
        """Proper factor degrees this pattern allows (strictly between 0 and total)."""
        sums = set()
        for size in range(1, len(self.degrees)):
            for combo in combinations(self.degrees, size):
                sums.add(sum(combo))
        return frozenset(s for s in sums if 0 < s < self.total)

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self.degrees) + "}"


# ============================================================================
# PARAMETER DATA
# ============================================================================

@dataclass(frozen=True)
class ParamData:
    """
    Exact values of every formula attached to a rational parameter t != 2.

    f_t = X^6 + uX^5 + vX^4 + wX^3 + vX^2 + uX + 1 is reciprocal, and
    g_t = X^3 + uX^2 + (v - 3)X - 2u + w is the minimal polynomial of
    alpha + 1/alpha. ``a`` holds a_0..a_5, the coordinates of beta in the
    power basis of alpha.
    """

    t: Fraction
    u: Fraction
    v: Fraction
    w: Fraction
    s: Fraction
    a: Tuple[Fraction, ...]
    f_t: "PolyQ"
    g_t: "PolyQ"

    @property
    def is_degenerate(self) -> bool:
        """t = 1 collapses f_t to (X^2+X+1)^3."""
        return self.t == 1


# ============================================================================
# VERDICTS
# ============================================================================

@dataclass(frozen=True)
class IrreducibilityVerdict:
    """
    Outcome of the irreducibility sieve.

    status is one of "irreducible", "reducible", "inconclusive". For
    "reducible" ``factor`` holds the factor that was found; for
    "irreducible" ``witness_primes`` are the primes whose degree patterns
    jointly exclude every proper factor degree.
    """

    status: str
    witness_primes: Tuple[int, ...] = ()
    patterns: Tuple[Tuple[int, DegreePattern], ...] = ()
    factor: Optional["PolyQ"] = None
    degenerate: bool = False

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"


@dataclass(frozen=True)
class TotallyRealVerdict:
    """Two independent totally-real oracles and the discriminant consistency check."""

    verdict: bool
    sturm_count: int
    disc_sign_positive: bool
    delta_matches_closed_form: bool
    cubic_real_roots: int


@dataclass(frozen=True)
class NumericPoint:
    """
    One real intersection point of F_5 and C_t, approximated exactly.

    x_mid is the midpoint of an isolating interval (x_lo, x_hi] of a root
    of f_t and y_mid = sum a_i x_mid^i. The residuals are exact values of
    the curve equations at (x_mid, y_mid); ``error_bound`` is an exact
    upper bound for both.
    """

    index: int
    x_lo: Fraction
    x_hi: Fraction
    x_mid: Fraction
    y_mid: Fraction
    fermat_residual: Fraction
    conic_residual: Fraction
    error_bound: Fraction


# ============================================================================
# CERTIFICATE
# ============================================================================

@dataclass
class Certificate:
    """
    Verification record for one parameter t.

    Booleans that do not apply (the field checks at the degenerate t = 1)
    are None. ``all_checks_pass`` looks at every applicable check; a
    totally-real verdict of False is a result, not a failure.
    """

    param: ParamData
    irreducible: IrreducibilityVerdict
    cyclotomic_remainder: Fraction
    cyclotomic_remainder_ok: bool
    resultant_identity_ok: bool
    no_points_at_infinity: bool
    quad_kernel: int
    six_roots_ok: Optional[bool] = None
    fermat_ok: Optional[bool] = None
    conic_ok: Optional[bool] = None
    orbit_ok: Optional[bool] = None
    recover_parameter_ok: Optional[bool] = None
    trace_cubic_ok: Optional[bool] = None
    galois_witness_ok: Optional[bool] = None
    totally_real: Optional[TotallyRealVerdict] = None
    galois_s3: Optional[bool] = None
    base_point_ok: Optional[bool] = None
    degree_patterns: Tuple[Tuple[int, DegreePattern], ...] = ()
    points: Optional[List[NumericPoint]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def degenerate(self) -> bool:
        return self.param.is_degenerate

    def failed_checks(self) -> List[str]:
        """Names of applicable checks that did not pass."""
        failed = []
        if not self.degenerate and not self.irreducible.is_irreducible:
            failed.append("irreducible")
        for name in (
            "cyclotomic_remainder_ok",
            "resultant_identity_ok",
            "no_points_at_infinity",
            "six_roots_ok",
            "fermat_ok",
            "conic_ok",
            "orbit_ok",
            "recover_parameter_ok",
            "trace_cubic_ok",
            "galois_witness_ok",
            "galois_s3",
            "base_point_ok",
        ):
            if getattr(self, name) is False:
                failed.append(name)
        if self.totally_real is not None and not self.totally_real.delta_matches_closed_form:
            failed.append("delta_matches_closed_form")
        return failed

    @property
    def all_checks_pass(self) -> bool:
        return not self.failed_checks()

    def __str__(self) -> str:
        return (
            f"Certificate(t={self.param.t}, irreducible={self.irreducible.status}, "
            f"kernel={self.quad_kernel}, pass={self.all_checks_pass})"
        )


@dataclass(frozen=True)
class SearchHit:
    """One admissible parameter found by the distinct-field search."""

    t: Fraction
    kernel: int
    certificate: Certificate


@dataclass
class FieldSearchResult:
    """All admissible parameters up to a height bound, ordered by t."""

    height_bound: int
    hits: List[SearchHit] = field(default_factory=list)

    @property
    def representatives(self) -> Dict[int, Fraction]:
        """First (smallest) t for each distinct squarefree kernel."""
        reps: Dict[int, Fraction] = {}
        for hit in self.hits:
            reps.setdefault(hit.kernel, hit.t)
        return reps

    @property
    def distinct_kernel_count(self) -> int:
        return len(self.representatives)


# ============================================================================
# OPTIONS
# ============================================================================

@dataclass
class CertifyOptions:
    """
    Tunables for a certification run.

    sieve_prime_bound: last prime scanned by the irreducibility sieve
    pattern_primes: how many good primes' degree patterns a certificate lists
    include_points: attach numeric points when the field is totally real
    precision_exponent: numeric points are refined to width 10^-precision_exponent
    """

    sieve_prime_bound: int = 200
    pattern_primes: int = 20
    include_points: bool = False
    precision_exponent: int = 6

    @classmethod
    def from_env(cls) -> "CertifyOptions":
        """Build options from SIEVE_PRIME_BOUND and PATTERN_PRIMES."""
        return cls(
            sieve_prime_bound=int(os.getenv("SIEVE_PRIME_BOUND", "200")),
            pattern_primes=int(os.getenv("PATTERN_PRIMES", "20")),
        )

    @property
    def precision(self) -> Fraction:
        return Fraction(1, 10 ** self.precision_exponent)


@dataclass
class CliConfig:
    """Parsed command line for one subcommand."""

    subcommand: str
    t: Optional[str] = None
    height: int = 10
    digits: int = 3
    precision: int = 6
    out: Optional[str] = None
    output_format: str = "cert"
    verbose: bool = False

    def validate(self) -> None:
        """
        Check the cross-field invariants argparse cannot express.

        Raises:
            CertificationError: INVALID_ARGUMENT on a violated invariant
        """
        if self.subcommand in ("certify", "points") and not self.t:
            raise CertificationError(
                code="INVALID_ARGUMENT",
                message=f"'{self.subcommand}' needs --t p/q",
            )
        if self.precision < 1:
            raise CertificationError(
                code="INVALID_ARGUMENT",
                message="--precision must be at least 1",
                details={"precision": self.precision},
            )
        if self.digits < 1:
            raise CertificationError(
                code="INVALID_ARGUMENT",
                message="--digits must be at least 1",
                details={"digits": self.digits},
            )
        if self.output_format not in ("cert", "csv", "svg"):
            raise CertificationError(
                code="INVALID_ARGUMENT",
                message=f"unknown format '{self.output_format}'",
            )
