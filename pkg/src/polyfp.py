"""
Polynomials over the prime field F_p and distinct-degree factorization.

Only what the irreducibility sieve needs: reduction of a rational
polynomial modulo a good prime, and the degree pattern of the irreducible
factors of a squarefree reduction.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from src.arith import is_prime
from src.logging_config import get_logger
from src.models import CertificationError, DegreePattern
from src.polyq import PolyQ

logger = get_logger(__name__)

MAX_PRIME = 2 ** 61


class PolyFp:
    """Dense polynomial over F_p, coefficients in [0, p) lowest degree first."""

    __slots__ = ("p", "_coeffs")

    def __init__(self, coeffs: Iterable[int], p: int):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self._coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls, p: int) -> "PolyFp":
        return cls([0, 1], p)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lc(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def _check(self, other: "PolyFp") -> None:
        if other.p != self.p:
            raise CertificationError(
                code="CONTEXT_MISMATCH",
                message="polynomials over different prime fields",
                details={"left": self.p, "right": other.p},
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.p == other.p and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.p, self._coeffs))

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (n - len(self._coeffs))
        b = other._coeffs + (0,) * (n - len(other._coeffs))
        return PolyFp((x + y for x, y in zip(a, b)), self.p)

    def __neg__(self) -> "PolyFp":
        return PolyFp((-c for c in self._coeffs), self.p)

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        return self + (-other)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        if self.is_zero or other.is_zero:
            return PolyFp([], self.p)
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return PolyFp(out, self.p)

    def divmod(self, divisor: "PolyFp") -> Tuple["PolyFp", "PolyFp"]:
        self._check(divisor)
        if divisor.is_zero:
            raise CertificationError(
                code="DIVISION_BY_ZERO_POLY",
                message="polynomial division by the zero polynomial",
                details={"p": self.p},
            )
        p = self.p
        rem = list(self._coeffs)
        db = divisor.degree
        if len(rem) - 1 < db:
            return PolyFp([], p), self
        inv_lc = pow(divisor.lc, -1, p)
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lc % p
            quot[k] = c
            if c:
                for j, b in enumerate(divisor._coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return PolyFp(quot, p), PolyFp(rem[:db], p)

    def __floordiv__(self, divisor: "PolyFp") -> "PolyFp":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "PolyFp") -> "PolyFp":
        return self.divmod(divisor)[1]

    def monic(self) -> "PolyFp":
        if self.is_zero:
            return self
        inv = pow(self.lc, -1, self.p)
        return PolyFp((c * inv for c in self._coeffs), self.p)

    def derivative(self) -> "PolyFp":
        return PolyFp((i * c for i, c in enumerate(self._coeffs) if i > 0), self.p)

    def gcd(self, other: "PolyFp") -> "PolyFp":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def powmod(self, exponent: int, modulus: "PolyFp") -> "PolyFp":
        """self^exponent mod modulus by square and multiply."""
        result = PolyFp([1], self.p) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = result * base % modulus
            base = base * base % modulus
            exponent >>= 1
        return result

    def __call__(self, x: int) -> int:
        result = 0
        for c in reversed(self._coeffs):
            result = (result * x + c) % self.p
        return result

    def __repr__(self) -> str:
        return f"PolyFp({list(self._coeffs)}, p={self.p})"


def reduce_mod_p(f: PolyQ, p: int) -> PolyFp:
    """
    Image of f in F_p[X], for a prime of good reduction.

    Raises:
        CertificationError: BAD_PRIME if p is not a prime below 2^61, divides a
            denominator of f, or divides the numerator of its leading coefficient
    """
    if not 2 <= p < MAX_PRIME or not is_prime(p):
        raise CertificationError(
            code="BAD_PRIME",
            message=f"{p} is not a prime below 2^61",
            details={"p": p},
        )
    if f.is_zero:
        raise CertificationError(code="ZERO_POLYNOMIAL", message="cannot reduce the zero polynomial")
    if any(c.denominator % p == 0 for c in f.coeffs):
        raise CertificationError(
            code="BAD_PRIME",
            message=f"{p} divides a denominator",
            details={"p": p},
        )
    if f.lc.numerator % p == 0:
        raise CertificationError(
            code="BAD_PRIME",
            message=f"{p} divides the leading coefficient",
            details={"p": p},
        )
    return PolyFp((c.numerator * pow(c.denominator, -1, p) for c in f.coeffs), p)


def degree_pattern(f: PolyFp) -> DegreePattern:
    """
    Sorted degrees of the irreducible factors of a squarefree f.

    Distinct-degree factorization: at step i, gcd(f, X^(p^i) - X) collects
    the product of the remaining irreducible factors of degree i.

    Raises:
        CertificationError: NOT_SQUAREFREE_MOD_P if gcd(f, f') is nonconstant
    """
    if f.is_zero:
        raise CertificationError(code="ZERO_POLYNOMIAL", message="degree pattern of the zero polynomial")
    rest = f.monic()
    if rest.gcd(rest.derivative()).degree > 0:
        raise CertificationError(
            code="NOT_SQUAREFREE_MOD_P",
            message=f"reduction mod {f.p} has a repeated factor",
            details={"p": f.p},
        )

    x = PolyFp.x(f.p)
    degrees: List[int] = []
    h = x
    i = 0
    while rest.degree >= 2 * (i + 1):
        i += 1
        h = h.powmod(f.p, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            degrees.extend([i] * (g.degree // i))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        degrees.append(rest.degree)
    return DegreePattern(tuple(degrees))


def collect_degree_patterns(
    f: PolyQ,
    primes: Sequence[int],
    limit: Optional[int] = None,
) -> List[Tuple[int, DegreePattern]]:
    """Degree patterns at the good primes among ``primes``; at most ``limit`` of them."""
    patterns: List[Tuple[int, DegreePattern]] = []
    for p in primes:
        if limit is not None and len(patterns) >= limit:
            break
        try:
            patterns.append((p, degree_pattern(reduce_mod_p(f, p))))
        except CertificationError as e:
            if e.code not in ("BAD_PRIME", "NOT_SQUAREFREE_MOD_P"):
                raise
            logger.debug(f"skipping p={p}: {e.code}", extra={"prime": p})
    return patterns
