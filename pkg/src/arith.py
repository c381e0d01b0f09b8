"""
Exact integer and rational helpers.

Rationals are ``fractions.Fraction`` throughout: canonical form (reduced,
positive denominator) is maintained by the type itself. This module adds
what Fraction does not provide: parsing and printing in the "p/q" certificate
format, deterministic primality, complete factorization (trial division then
Pollard rho with Brent's cycle detection), and squarefree kernels.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Union

from src.logging_config import get_logger
from src.models import CertificationError, Factorization

logger = get_logger(__name__)

Rational = Fraction

TRIAL_DIVISION_BOUND = 10 ** 6

# Strong-probable-prime bases; deterministic for n < 3317044064679887385961981.
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MILLER_RABIN_LIMIT = 3317044064679887385961981

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse "p/q" or "p" into a canonical Fraction.

    Raises:
        CertificationError: INVALID_RATIONAL for malformed text or a zero denominator
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if not match:
        raise CertificationError(
            code="INVALID_RATIONAL",
            message=f"'{text}' is not a rational of the form p/q",
        )
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise CertificationError(
            code="INVALID_RATIONAL",
            message=f"'{text}' has a zero denominator",
        )
    return Fraction(numerator, denominator)


def format_rational(q: Fraction) -> str:
    """Certificate format: "p/q", or "p" when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_rational_square(q: Fraction) -> bool:
    """True iff q is the square of a rational number."""
    q = Fraction(q)
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def is_prime(n: int) -> bool:
    """
    Miller-Rabin with a fixed witness set.

    The answer is proven for n below MILLER_RABIN_LIMIT; above it the
    same witnesses give a strong probable-prime verdict, which is logged.
    """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    if n >= MILLER_RABIN_LIMIT:
        logger.warning(f"{n} is a strong probable prime; witness set not proven at this size")
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (Pollard rho, Brent cycles)."""
    # Seeded from n so factorizations are reproducible run to run.
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), rng.randrange(1, n)
        g = r = q = 1
        x = ys = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
        logger.debug(f"rho cycle collapsed for n={n}, retrying with a new constant")


def _split_large(n: int, found: Dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        found[n] = found.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split_large(d, found)
    _split_large(n // d, found)


def factor_integer(n: int) -> Factorization:
    """
    Complete prime factorization of n >= 2.

    Trial division up to TRIAL_DIVISION_BOUND (stopping early once the
    cofactor is prime), then Pollard rho on what remains.

    Raises:
        CertificationError: INPUT_TOO_SMALL if n < 2
    """
    if n < 2:
        raise CertificationError(
            code="INPUT_TOO_SMALL",
            message="factor_integer needs n >= 2",
            details={"n": n},
        )
    found: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p

    d, step = 5, 2
    checked_prime = False
    while n > 1 and d <= TRIAL_DIVISION_BOUND and d * d <= n:
        if n % d == 0:
            while n % d == 0:
                found[d] = found.get(d, 0) + 1
                n //= d
            checked_prime = False
        elif d > 1000 and not checked_prime:
            if is_prime(n):
                break
            checked_prime = True
        d += step
        step = 6 - step

    _split_large(n, found)
    return Factorization(pairs=tuple(sorted(found.items())))


def divisors(n: int) -> List[int]:
    """Positive divisors of |n| in increasing order (n != 0)."""
    n = abs(n)
    if n == 1:
        return [1]
    result = [1]
    for prime, exponent in factor_integer(n).pairs:
        result = [d * prime ** e for d in result for e in range(exponent + 1)]
    return sorted(result)


def squarefree_kernel(q: Union[Fraction, int]) -> int:
    """
    The squarefree positive integer k with |q| = k * (rational square).

    q = n/d is congruent to n*d modulo squares, so k is the product of the
    primes appearing to an odd power in |n*d|.

    Raises:
        CertificationError: ZERO_INPUT if q = 0
    """
    q = Fraction(q)
    if q == 0:
        raise CertificationError(code="ZERO_INPUT", message="0 has no squarefree kernel")
    m = abs(q.numerator) * q.denominator
    if m == 1:
        return 1
    kernel = 1
    for prime, exponent in factor_integer(m).pairs:
        if exponent % 2:
            kernel *= prime
    return kernel


def primes_up_to(bound: int) -> List[int]:
    """Primes p <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, bound + 1, p)))
    return [p for p, flag in enumerate(sieve) if flag]
