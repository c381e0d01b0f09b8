"""
Exact univariate polynomials over the rationals.

PolyQ is an immutable dense polynomial (coefficients lowest degree first,
trimmed). On top of it this module provides resultants (subresultant
chain for scalar coefficients, fraction-free Bareiss elimination on the
Sylvester matrix for coefficients in Q[X]), discriminants, Sturm chains,
real-root isolation and refinement, and rational roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.arith import divisors, format_rational
from src.logging_config import get_logger
from src.models import CertificationError

logger = get_logger(__name__)

Scalar = Union[Fraction, int]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class PolyQ:
    """
    Dense polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of X^i; the leading coefficient is
    nonzero unless the polynomial is zero (degree -1).

    Example:
        >>> p = PolyQ([-1, 0, 1])          # X^2 - 1
        >>> q, r = p.divmod(PolyQ([-1, 1]))
        >>> str(q), r.is_zero
        ('X + 1', True)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(cs)

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def x(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Scalar) -> "PolyQ":
        return cls([c])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "PolyQ":
        """Inverse of ``to_strings``."""
        return cls(Fraction(s) for s in items)

    # ------------------------------------------------------------------
    # shape
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    @staticmethod
    def _lift(other: Union["PolyQ", Scalar]) -> "PolyQ":
        return other if isinstance(other, PolyQ) else PolyQ([other])

    def __add__(self, other: Union["PolyQ", Scalar]) -> "PolyQ":
        other = self._lift(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return PolyQ(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self._coeffs)

    def __sub__(self, other: Union["PolyQ", Scalar]) -> "PolyQ":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "PolyQ":
        return self._lift(other) - self

    def __mul__(self, other: Union["PolyQ", Scalar]) -> "PolyQ":
        if not isinstance(other, PolyQ):
            c = Fraction(other)
            return PolyQ(c * a for a in self._coeffs)
        if self.is_zero or other.is_zero:
            return PolyQ()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PolyQ":
        if exponent < 0:
            raise ValueError("negative exponent")
        result, base = PolyQ([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQ):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == PolyQ([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def divmod(self, divisor: "PolyQ") -> Tuple["PolyQ", "PolyQ"]:
        """
        Euclidean division: self = divisor * quotient + remainder, deg r < deg divisor.

        Raises:
            CertificationError: DIVISION_BY_ZERO_POLY if divisor is zero
        """
        if divisor.is_zero:
            raise CertificationError(
                code="DIVISION_BY_ZERO_POLY",
                message="polynomial division by the zero polynomial",
            )
        rem = list(self._coeffs)
        db = divisor.degree
        if len(rem) - 1 < db:
            return PolyQ(), self
        quot = [Fraction(0)] * (len(rem) - db)
        inv_lc = 1 / divisor.lc
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(divisor._coeffs):
                    rem[k + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:db])

    __divmod__ = divmod

    def __floordiv__(self, divisor: "PolyQ") -> "PolyQ":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "PolyQ") -> "PolyQ":
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: Union["PolyQ", Scalar]) -> "PolyQ":
        """Division that must leave no remainder (fraction-free elimination)."""
        if not isinstance(divisor, PolyQ):
            return self * (1 / Fraction(divisor))
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise CertificationError(
                code="DIVISION_NOT_EXACT",
                message="expected an exact polynomial division",
                details={"dividend": str(self), "divisor": str(divisor)},
            )
        return quotient

    def pseudo_remainder(self, divisor: "PolyQ") -> "PolyQ":
        """Remainder of lc(divisor)^(deg self - deg divisor + 1) * self by divisor."""
        delta = self.degree - divisor.degree
        if delta < 0:
            return self
        return (self * divisor.lc ** (delta + 1)) % divisor

    # ------------------------------------------------------------------
    # evaluation and transforms
    # ------------------------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def compose(self, inner: "PolyQ") -> "PolyQ":
        """self(inner(X))."""
        result = PolyQ()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def derivative(self) -> "PolyQ":
        return PolyQ(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def reciprocal(self) -> "PolyQ":
        """X^deg * p(1/X)."""
        return PolyQ(reversed(self._coeffs))

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(0)
        den = 1
        for c in self._coeffs:
            den = lcm(den, c.denominator)
        num = 0
        for c in self._coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        return Fraction(num, den)

    def primitive(self) -> "PolyQ":
        """self / content: integer coefficients, gcd 1, same sign pattern."""
        if self.is_zero:
            return self
        return self * (1 / self.content())

    def integer_coeffs(self) -> List[int]:
        return [int(c) for c in self.primitive()._coeffs]

    def sign_at(self, x: Optional[Scalar], side: int = 0) -> int:
        """
        Sign of self at x; with x None, at -infinity (side < 0) or +infinity (side > 0).
        """
        if x is not None:
            return _sign(self(x))
        if self.is_zero:
            return 0
        s = _sign(self.lc)
        if side < 0 and self.degree % 2:
            s = -s
        return s

    def abs_bound(self, radius: Fraction) -> Fraction:
        """sum |c_i| radius^i, an upper bound for |self| on [-radius, radius]."""
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * radius + abs(c)
        return result

    def cauchy_bound(self) -> Fraction:
        """1 + max |a_i / a_d|; every complex root has strictly smaller modulus."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.lc)
        return 1 + max(abs(c) / lead for c in self._coeffs[:-1])

    def gcd(self, other: "PolyQ") -> "PolyQ":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "PolyQ") -> Tuple["PolyQ", "PolyQ", "PolyQ"]:
        """(g, s, t) with s*self + t*other = g and g monic."""
        r0, r1 = self, other
        s0, s1 = PolyQ([1]), PolyQ()
        t0, t1 = PolyQ(), PolyQ([1])
        while not r1.is_zero:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero:
            return r0, s0, t0
        inv = 1 / r0.lc
        return r0 * inv, s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        return self.gcd(self.derivative()).degree <= 0

    def squarefree_part(self) -> "PolyQ":
        """self / gcd(self, self')."""
        if self.degree < 1:
            return self
        return self.exact_div(self.gcd(self.derivative()))

    # ------------------------------------------------------------------
    # printing
    # ------------------------------------------------------------------

    def to_strings(self) -> List[str]:
        """Certificate format: coefficients lowest first as "p/q" strings."""
        return [format_rational(c) for c in self._coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = "X" if i == 1 else f"X^{i}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolyQ({self})"


X = PolyQ.x()


# ============================================================================
# RESULTANTS AND DISCRIMINANTS
# ============================================================================

def resultant(a: PolyQ, b: PolyQ) -> Fraction:
    """
    Resultant of a and b (the Sylvester determinant).

    Contents are pulled out first; the primitive parts go through the
    subresultant chain, whose intermediate values stay integral.

    Raises:
        CertificationError: BOTH_ZERO if a and b are both zero
    """
    if a.is_zero and b.is_zero:
        raise CertificationError(code="BOTH_ZERO", message="resultant of two zero polynomials")
    if a.is_zero or b.is_zero:
        return Fraction(0)
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree

    ca, cb = a.content(), b.content()
    A, B = a.primitive(), b.primitive()
    scale = ca ** b.degree * cb ** a.degree

    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1

    g = h = Fraction(1)
    while True:
        da, db = A.degree, B.degree
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = A.pseudo_remainder(B)
        A = B
        if R.is_zero:
            return Fraction(0)
        B = R * (1 / (g * h ** delta))
        g = A.lc
        h = g ** delta / h ** (delta - 1)
        if B.degree == 0:
            break

    h = h ** (1 - A.degree) * B.lc ** A.degree
    return s * scale * h


def _bareiss_determinant(matrix: List[List[PolyQ]]) -> PolyQ:
    """Fraction-free determinant of a square matrix with entries in Q[X]."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return PolyQ([1])
    sign = 1
    prev = PolyQ([1])
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return PolyQ()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = PolyQ()
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def _trim(coeffs: Sequence[PolyQ]) -> List[PolyQ]:
    out = list(coeffs)
    while out and out[-1].is_zero:
        out.pop()
    return out


def sylvester_matrix(a: Sequence[PolyQ], b: Sequence[PolyQ]) -> List[List[PolyQ]]:
    """Sylvester matrix in Y of a = sum a[i] Y^i and b = sum b[j] Y^j."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows: List[List[PolyQ]] = []
    for i in range(n):
        row = [PolyQ()] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for j in range(m):
        row = [PolyQ()] * size
        for k, c in enumerate(reversed(b)):
            row[j + k] = c
        rows.append(row)
    return rows


def sylvester_resultant_polycoeff(a: Sequence[PolyQ], b: Sequence[PolyQ]) -> PolyQ:
    """
    Resultant with respect to Y of two polynomials with coefficients in Q[X].

    ``a[i]`` is the coefficient of Y^i. The Sylvester determinant is taken
    by Bareiss elimination, every division being exact in Q[X].

    Raises:
        CertificationError: BOTH_ZERO if both are zero in Y
    """
    a, b = _trim(a), _trim(b)
    if not a and not b:
        raise CertificationError(code="BOTH_ZERO", message="resultant of two zero polynomials")
    if not a or not b:
        return PolyQ()
    return _bareiss_determinant(sylvester_matrix(a, b))


def discriminant(p: PolyQ) -> Fraction:
    """
    disc(p) = (-1)^(d(d-1)/2) * res(p, p') / lc(p).

    Raises:
        CertificationError: DEGREE_TOO_SMALL if deg p < 1
    """
    d = p.degree
    if d < 1:
        raise CertificationError(
            code="DEGREE_TOO_SMALL",
            message="discriminant needs a polynomial of degree >= 1",
            details={"degree": d},
        )
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


# ============================================================================
# STURM CHAINS AND REAL ROOTS
# ============================================================================

@dataclass(frozen=True)
class SturmChain:
    """
    Signed remainder sequence p, p', -rem(p, p'), ... scaled by positive contents.

    Scaling every entry by a positive constant keeps the sign variations,
    so the chain stays a Sturm chain while its coefficients stay integral.
    """

    polys: Tuple[PolyQ, ...]

    def variations(self, x: Optional[Scalar], side: int = 0) -> int:
        signs = [s for s in (p.sign_at(x, side) for p in self.polys) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count(self, lo: Optional[Scalar], hi: Optional[Scalar]) -> int:
        """Distinct real roots in (lo, hi]; None means -inf for lo and +inf for hi."""
        return self.variations(lo, -1) - self.variations(hi, +1)


def sturm_chain(p: PolyQ) -> SturmChain:
    """
    Sturm chain of a squarefree polynomial.

    Raises:
        CertificationError: ZERO_POLYNOMIAL for p = 0, NOT_SQUAREFREE if gcd(p, p') is nonconstant
    """
    if p.is_zero:
        raise CertificationError(code="ZERO_POLYNOMIAL", message="Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    if p.degree >= 1:
        chain.append(p.derivative().primitive())
        while True:
            r = -(chain[-2] % chain[-1])
            if r.is_zero:
                break
            chain.append(r.primitive())
    if chain[-1].degree > 0:
        raise CertificationError(
            code="NOT_SQUAREFREE",
            message="polynomial has a repeated factor",
            details={"gcd": str(chain[-1].monic())},
        )
    return SturmChain(tuple(chain))


def _check_bounds(lo: Optional[Scalar], hi: Optional[Scalar]) -> None:
    if lo is not None and hi is not None and not lo < hi:
        raise CertificationError(
            code="INVALID_INTERVAL",
            message="interval needs lo < hi",
            details={"lo": str(lo), "hi": str(hi)},
        )


def sturm_count(p: PolyQ, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None) -> int:
    """
    Exact number of real roots of the squarefree p in (lo, hi].

    lo = None stands for -infinity and hi = None for +infinity; the chain
    is then evaluated by its signs at infinity.
    """
    _check_bounds(lo, hi)
    return sturm_chain(p).count(lo, hi)


@dataclass(frozen=True)
class IsolatingInterval:
    """Interval (lo, hi] holding exactly one real root of ``target``."""

    lo: Fraction
    hi: Fraction
    target: PolyQ

    def __post_init__(self) -> None:
        _check_bounds(self.lo, self.hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Scalar) -> bool:
        return self.lo < x <= self.hi

    def __str__(self) -> str:
        return f"({format_rational(self.lo)}, {format_rational(self.hi)}]"


def isolate_real_roots(p: PolyQ) -> List[IsolatingInterval]:
    """
    One isolating interval per real root of the squarefree p, ascending.

    Starts from (-B, B] with B the smallest power of two above the Cauchy
    bound and bisects, counting with the Sturm chain.
    """
    chain = sturm_chain(p)
    if p.degree < 1:
        return []
    cauchy = p.cauchy_bound()
    bound = Fraction(1)
    while bound < cauchy:
        bound *= 2

    intervals: List[IsolatingInterval] = []

    def bisect(lo: Fraction, hi: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            intervals.append(IsolatingInterval(lo, hi, p))
            return
        mid = (lo + hi) / 2
        left = chain.count(lo, mid)
        bisect(lo, mid, left)
        bisect(mid, hi, n - left)

    bisect(-bound, bound, chain.count(-bound, bound))
    logger.debug(f"isolated {len(intervals)} real roots of a degree-{p.degree} polynomial")
    return intervals


def refine(interval: IsolatingInterval, width: Fraction) -> IsolatingInterval:
    """
    Bisect until the interval is no wider than ``width``.

    Signs are evaluated exactly at each midpoint; an interval already
    narrow enough is returned unchanged.

    Raises:
        CertificationError: INVALID_INTERVAL for a non-positive width
    """
    width = Fraction(width)
    if width <= 0:
        raise CertificationError(
            code="INVALID_INTERVAL",
            message="refinement width must be positive",
            details={"width": str(width)},
        )
    if interval.width <= width:
        return interval

    p = interval.target
    lo, hi = interval.lo, interval.hi
    if _sign(p(hi)) == 0:
        return IsolatingInterval(max(lo, hi - width), hi, p)

    chain: Optional[SturmChain] = None
    s_lo = _sign(p(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(p(mid))
        if s_mid == 0:
            lo, hi = max(lo, mid - width), mid
            break
        if s_lo != 0:
            root_on_left = s_lo * s_mid < 0
        else:
            # lo is a different root of p; fall back to counting.
            chain = chain or sturm_chain(p)
            root_on_left = chain.count(lo, mid) == 1
        if root_on_left:
            hi = mid
        else:
            lo, s_lo = mid, s_mid
    return IsolatingInterval(lo, hi, p)


def rational_roots(p: PolyQ) -> List[Fraction]:
    """
    All rational roots of p with multiplicity, ascending.

    Candidates r = n/d come from the rational root theorem on the
    primitive integer form; the necessary conditions (d - n) | F(1) and
    (d + n) | F(-1) prune them before exact evaluation.

    Raises:
        CertificationError: ZERO_POLYNOMIAL for p = 0
    """
    if p.is_zero:
        raise CertificationError(code="ZERO_POLYNOMIAL", message="rational roots of the zero polynomial")
    roots: List[Fraction] = []
    work = p.primitive()
    while work.degree >= 1 and work.coeff(0) == 0:
        roots.append(Fraction(0))
        work = PolyQ(work.coeffs[1:])
    if work.degree < 1:
        return sorted(roots)

    ints = work.integer_coeffs()
    f_one, f_minus_one = work(1), work(-1)
    candidates = set()
    for den in divisors(ints[-1]):
        for num in divisors(ints[0]):
            if gcd(num, den) != 1:
                continue
            for signed in (num, -num):
                if f_one != 0 and den != signed and f_one % (den - signed) != 0:
                    continue
                if f_minus_one != 0 and den != -signed and f_minus_one % (den + signed) != 0:
                    continue
                candidates.add(Fraction(signed, den))

    for r in sorted(candidates):
        linear = PolyQ([-r, 1])
        while work.degree >= 1 and work(r) == 0:
            roots.append(r)
            work = work.exact_div(linear)
    return sorted(roots)
