"""
Degree-six points of the Fermat quintic x^5 + y^5 + z^5 = 0.

For a rational parameter t != 2 the conic

    C_t : x^2 + y^2 + z^2 + t(xy + xz + yz) = 0

is tangent to the quintic at P = [zeta_3, zeta_3^2, 1] and its conjugate. The
six remaining intersection points are [x, y, 1] with x a root of the sextic
f_t and y = sum a_i x^i. This module evaluates those formulas exactly and
implements every check that certifies the points: irreducibility of f_t,
the six roots inside Q(alpha), the curve equations, the resultant identity,
the totally-real criterion and the quadratic subfield used to tell fields apart.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple, Union

from src.arith import is_rational_square, primes_up_to, squarefree_kernel
from src.logging_config import get_logger
from src.models import (
    CertificationError,
    DegreePattern,
    IrreducibilityVerdict,
    NumericPoint,
    ParamData,
    TotallyRealVerdict,
)
from src.numberfield import NFElement, NumberFieldCtx, ProjectivePointNF
from src.polyfp import degree_pattern, reduce_mod_p
from src.polyq import (
    IsolatingInterval,
    PolyQ,
    discriminant,
    isolate_real_roots,
    rational_roots,
    refine,
    resultant,
    sturm_count,
    sylvester_resultant_polycoeff,
)

logger = get_logger(__name__)

T = PolyQ.x()
X = PolyQ.x()

# X^2 + X + 1, the minimal polynomial of zeta_3.
CYCLOTOMIC = PolyQ([1, 1, 1])

# 7X^5 - 10X^4 - 20X^3 - 4; its positive root r bounds the totally real range (2, r).
R_POLYNOMIAL = 7 * T ** 5 - 10 * T ** 4 - 20 * T ** 3 - 4

# Closed forms in t. Each a_i is numerator / denominator.
_Q = T ** 2 + T - 1
_S_FACTOR = T ** 4 - 3 * T ** 3 - T ** 2 + 3 * T + 1
_U_NUM = 3 * T ** 2 - 2 * T + 2
_V_NUM = T ** 5 - 5 * T ** 4 + 10 * T ** 3 - 20 * T ** 2 + 15 * T - 7
_W_NUM = -3 * T ** 5 + 10 * T ** 4 - 20 * T ** 3 + 20 * T ** 2 - 20 * T + 6
_A_NUM = (
    -(T ** 2 + 1) * (T ** 3 - T ** 2 + 2 * T - 3),
    -(3 * T ** 7 - 9 * T ** 6 + 16 * T ** 5 - 15 * T ** 4 + 10 * T ** 3 - 11 * T ** 2 + 8 * T - 7),
    2 * T ** 8 - 14 * T ** 7 + 52 * T ** 6 - 99 * T ** 5 + 100 * T ** 4 - 54 * T ** 3
    + 38 * T ** 2 - 44 * T + 13,
    T ** 8 + T ** 7 - 21 * T ** 6 + 65 * T ** 5 - 90 * T ** 4 + 78 * T ** 3 - 57 * T ** 2
    + 32 * T - 15,
    -(2 * T ** 5 - 6 * T ** 4 + 13 * T ** 3 - 14 * T ** 2 + 7 * T - 5),
    -(T ** 2 + T - 1) * (T ** 3 - T ** 2 + 2 * T - 3),
)
_REMAINDER_NUM = 5 * (T ** 4 - 3 * T ** 3 + 4 * T ** 2 - 2 * T + 1) * (T - 1)

# Degree patterns possible for a sextic whose Galois group S3 acts regularly on its roots.
ALLOWED_PATTERNS = {(1, 1, 1, 1, 1, 1), (2, 2, 2), (3, 3)}

RationalLike = Union[Fraction, int]


def _degenerate(t: Fraction, message: str) -> CertificationError:
    return CertificationError(
        code="DEGENERATE_PARAMETER",
        message=message,
        details={"t": str(t)},
    )


# ============================================================================
# PARAMETER FORMULAS
# ============================================================================

def build_params(t: RationalLike) -> ParamData:
    """
    Evaluate u, v, w, s, a_0..a_5, f_t and g_t at t.

    Args:
        t: Rational parameter; t = 1 is accepted and flagged as degenerate

    Returns:
        ParamData with every formula evaluated exactly

    Raises:
        CertificationError: DEGENERATE_PARAMETER for t = 2
    """
    t = Fraction(t)
    if t == 2:
        raise _degenerate(t, "t = 2 makes the denominators of u, v, w vanish")
    q = _Q(t)
    s = _S_FACTOR(t) * (t - 2)
    if q == 0 or s == 0:
        raise _degenerate(t, "a denominator of the parameter formulas vanishes")

    u = _U_NUM(t) / q
    v = _V_NUM(t) / ((t - 2) * q ** 2)
    w = _W_NUM(t) / ((t - 2) * q ** 2)
    denominators = (s, q * s, q * (t - 2) * s, q * (t - 2) * s, s, s)
    a = tuple(num(t) / den for num, den in zip(_A_NUM, denominators))

    f_t = PolyQ([1, u, v, w, v, u, 1])
    g_t = PolyQ([w - 2 * u, v - 3, u, 1])
    if t == 1:
        logger.warning("t = 1 is degenerate: f_t = (X^2+X+1)^3", extra={"t": "1"})
    return ParamData(t=t, u=u, v=v, w=w, s=s, a=a, f_t=f_t, g_t=g_t)


def d_value(t: RationalLike) -> Fraction:
    """d(t) = (2 - t)(7t^5 - 10t^4 - 20t^3 - 4); K_t contains Q(sqrt d(t))."""
    t = Fraction(t)
    return (2 - t) * R_POLYNOMIAL(t)


def in_totally_real_range(t: RationalLike) -> bool:
    """2 < t < r, decided from the exact sign of the r-polynomial at t."""
    t = Fraction(t)
    return t > 2 and R_POLYNOMIAL(t) < 0


def delta_closed_form(t: RationalLike) -> Fraction:
    """Discriminant of g_t in factored form."""
    t = Fraction(t)
    return (
        -25 * _S_FACTOR(t) ** 2 * R_POLYNOMIAL(t) * (t - 1) ** 2
        / ((t - 2) ** 3 * _Q(t) ** 6)
    )


def cyclotomic_remainder(pd: ParamData) -> Fraction:
    """The remainder of f_t modulo X^2 + X + 1, which is a constant."""
    remainder = pd.f_t % CYCLOTOMIC
    if remainder.degree > 0:
        raise CertificationError(
            code="ORACLE_DISAGREEMENT",
            message="remainder of f_t by X^2+X+1 is not constant",
            details={"remainder": str(remainder)},
        )
    return remainder.coeff(0)


def cyclotomic_remainder_matches(pd: ParamData) -> bool:
    """Compare the remainder with 5(t^4-3t^3+4t^2-2t+1)(t-1) / ((2-t)(t^2+t-1)^2)."""
    t = pd.t
    closed = _REMAINDER_NUM(t) / ((2 - t) * _Q(t) ** 2)
    return cyclotomic_remainder(pd) == closed


# ============================================================================
# IRREDUCIBILITY
# ============================================================================

def certify_irreducible(pd: ParamData, prime_bound: int = 200) -> IrreducibilityVerdict:
    """
    Decide irreducibility of f_t over Q without factoring it.

    Cheap detectors run first (rational roots, divisibility by X^2+X+1).
    Then every good prime up to ``prime_bound`` contributes the degree
    pattern of f_t mod p; a factor of degree k over Q forces k to be a
    subset sum of every pattern, so once no proper degree survives all
    patterns, f_t is irreducible.

    Returns:
        IrreducibilityVerdict with status irreducible, reducible or inconclusive
    """
    f = pd.f_t
    degenerate = pd.is_degenerate

    roots = rational_roots(f)
    if roots:
        return IrreducibilityVerdict(
            status="reducible", factor=PolyQ([-roots[0], 1]), degenerate=degenerate
        )
    if (f % CYCLOTOMIC).is_zero:
        logger.info("f_t is divisible by X^2+X+1", extra={"t": str(pd.t)})
        return IrreducibilityVerdict(status="reducible", factor=CYCLOTOMIC, degenerate=degenerate)

    feasible: Set[int] = set(range(1, f.degree))
    witnesses: List[int] = []
    patterns = []
    for p in primes_up_to(prime_bound):
        try:
            pattern = degree_pattern(reduce_mod_p(f, p))
        except CertificationError as e:
            if e.code not in ("BAD_PRIME", "NOT_SQUAREFREE_MOD_P"):
                raise
            logger.debug(f"sieve skips p={p}: {e.code}", extra={"prime": p})
            continue
        patterns.append((p, pattern))
        narrowed = feasible & pattern.subset_sums()
        if narrowed != feasible:
            witnesses.append(p)
            feasible = narrowed
        if not feasible:
            logger.info(
                f"f_t irreducible, witness primes {witnesses}",
                extra={"t": str(pd.t)},
            )
            return IrreducibilityVerdict(
                status="irreducible",
                witness_primes=tuple(witnesses),
                patterns=tuple(patterns),
            )

    logger.warning(
        f"sieve inconclusive up to {prime_bound}; feasible degrees {sorted(feasible)}",
        extra={"t": str(pd.t)},
    )
    return IrreducibilityVerdict(
        status="inconclusive", witness_primes=tuple(witnesses), patterns=tuple(patterns)
    )


# ============================================================================
# POINTS IN Q(alpha)
# ============================================================================

def field_context(pd: ParamData) -> NumberFieldCtx:
    """Q(alpha) = Q[X]/(f_t)."""
    if pd.is_degenerate:
        raise _degenerate(pd.t, "f_1 = (X^2+X+1)^3 does not define a field")
    return NumberFieldCtx(pd.f_t)


def build_beta(pd: ParamData, ctx: NumberFieldCtx) -> NFElement:
    """
    beta = sum a_i alpha^i in Q(alpha).

    Raises:
        CertificationError: DEGENERATE_PARAMETER at t = 1, CONTEXT_MISMATCH if
            ctx is not Q[X]/(f_t)
    """
    if pd.is_degenerate:
        raise _degenerate(pd.t, "beta is undefined when f_t is not squarefree")
    if ctx.modulus != pd.f_t:
        raise CertificationError(
            code="CONTEXT_MISMATCH",
            message="context modulus is not f_t",
            details={"t": str(pd.t), "modulus": str(ctx.modulus)},
        )
    return ctx.element(pd.a)


def verify_fermat_point(x: NFElement, y: NFElement) -> bool:
    """x^5 + y^5 + 1 = 0 exactly."""
    return (x ** 5 + y ** 5 + 1).is_zero


def verify_conic_point(pd: ParamData, x: NFElement, y: NFElement) -> bool:
    """x^2 + y^2 + 1 + t(xy + x + y) = 0 exactly."""
    return (x * x + y * y + 1 + (x * y + x + y) * pd.t).is_zero


def conic_intersection_y(pd: ParamData, x: NFElement) -> NFElement:
    """The y-coordinate sum a_i x^i of the intersection point above x."""
    return x.ctx.eval_poly(PolyQ(pd.a), x)


def six_roots(pd: ParamData, ctx: NumberFieldCtx) -> List[NFElement]:
    """
    The roots alpha, beta, beta/alpha, 1/alpha, 1/beta, alpha/beta of f_t.

    Raises:
        CertificationError: DEGENERATE_PARAMETER at t = 1, SEPARABILITY_FAILURE
            if two of them coincide or beta is not invertible
    """
    alpha = ctx.generator
    beta = build_beta(pd, ctx)
    try:
        roots = [alpha, beta, beta / alpha, 1 / alpha, 1 / beta, alpha / beta]
    except CertificationError as e:
        if e.code != "NOT_INVERTIBLE":
            raise
        raise CertificationError(
            code="SEPARABILITY_FAILURE",
            message="a root of f_t is not invertible in Q(alpha)",
            details={"t": str(pd.t), **(e.details or {})},
        ) from e
    if len(set(roots)) != 6:
        raise CertificationError(
            code="SEPARABILITY_FAILURE",
            message="the six roots are not pairwise distinct",
            details={"t": str(pd.t)},
        )
    return roots


def six_root_factorization_ok(
    pd: ParamData, ctx: NumberFieldCtx, roots: Optional[Sequence[NFElement]] = None
) -> bool:
    """Every root satisfies f_t, and prod (X - r_i) expands to f_t with rational coefficients."""
    if roots is None:
        roots = six_roots(pd, ctx)
    if not all(ctx.eval_poly(pd.f_t, r).is_zero for r in roots):
        return False
    coeffs = ctx.product_of_linears(roots)
    if not all(c.is_rational for c in coeffs):
        return False
    return PolyQ(c.rational_value() for c in coeffs) == pd.f_t


def orbit_points(pd: ParamData, ctx: NumberFieldCtx) -> List[ProjectivePointNF]:
    """
    The six points of F_5 meeting C_t outside P and its conjugate.

    [alpha, beta, 1], [1/alpha, beta/alpha, 1], [1/beta, alpha/beta, 1] and
    the same three with x and y swapped.
    """
    alpha, beta, beta_over_alpha, inv_alpha, inv_beta, alpha_over_beta = six_roots(pd, ctx)
    one = ctx.one
    base = [
        ProjectivePointNF(alpha, beta, one),
        ProjectivePointNF(inv_alpha, beta_over_alpha, one),
        ProjectivePointNF(inv_beta, alpha_over_beta, one),
    ]
    return base + [point.swapped() for point in base]


def orbit_points_ok(pd: ParamData, points: Sequence[ProjectivePointNF]) -> bool:
    """Six distinct nontrivial points, on both curves, closed under x <-> y, y given by x."""
    if len(points) != 6 or len(set(points)) != 6:
        return False
    point_set = set(points)
    for point in points:
        if point.is_trivial or point.swapped() not in point_set:
            return False
        if not (verify_fermat_point(point.x, point.y) and verify_conic_point(pd, point.x, point.y)):
            return False
        if conic_intersection_y(pd, point.x) != point.y:
            return False
    return True


def recover_parameter(x: NFElement, y: NFElement) -> Fraction:
    """
    t = -(x^2 + y^2 + 1) / (xy + x + y), the conic through [x, y, 1].

    Raises:
        CertificationError: PHI_UNDEFINED when xy + x + y = 0,
            NON_RATIONAL_VALUE when the quotient is not rational
    """
    denominator = x * y + x + y
    if denominator.is_zero:
        raise CertificationError(
            code="PHI_UNDEFINED",
            message="xy + x + y vanishes; the point is a base point of the pencil",
        )
    return (-(x * x + y * y + 1) / denominator).rational_value()


def trace_cubic_ok(pd: ParamData, ctx: NumberFieldCtx) -> bool:
    """alpha + 1/alpha is a root of g_t."""
    alpha = ctx.generator
    return ctx.eval_poly(pd.g_t, alpha + 1 / alpha).is_zero


def galois_non_cyclic_witness(pd: ParamData, ctx: NumberFieldCtx) -> bool:
    """
    Image of beta under the automorphism alpha -> 1/alpha.

    That automorphism sends beta to sum a_i alpha^-i, which must be beta/alpha;
    the involution beta -> 1/beta of the same orbit is a different one.
    """
    alpha = ctx.generator
    beta = build_beta(pd, ctx)
    image = ctx.eval_poly(PolyQ(pd.a), 1 / alpha)
    return image == beta / alpha and beta / alpha != 1 / beta


# ============================================================================
# CONIC PENCIL AND RESULTANT
# ============================================================================

def _cyclotomic_context() -> NumberFieldCtx:
    return NumberFieldCtx(CYCLOTOMIC)


def check_tangency_pencil(
    a: RationalLike, b: RationalLike, c: RationalLike,
    d: RationalLike, e: RationalLike, f: RationalLike,
) -> bool:
    """
    Is the conic ax^2 + by^2 + cz^2 + dxy + exz + fyz tangent to F_5 at P?

    The closed condition (a = b = c, d = e = f, d != 2a) is checked against
    a direct computation in Q(zeta_3): P lies on the conic and the gradient
    there is a nonzero multiple of (zeta, zeta^2, 1), the tangent of F_5 at P.

    Raises:
        CertificationError: ZERO_CONIC if all coefficients vanish,
            ORACLE_DISAGREEMENT if the two computations differ
    """
    a, b, c, d, e, f = (Fraction(v) for v in (a, b, c, d, e, f))
    if not any((a, b, c, d, e, f)):
        raise CertificationError(code="ZERO_CONIC", message="all conic coefficients are zero")

    closed_form = a == b == c and d == e == f and d != 2 * a

    ctx = _cyclotomic_context()
    zeta = ctx.generator
    zeta2 = zeta * zeta
    on_conic = (zeta2 * a + zeta2 * zeta2 * b + c + zeta * zeta2 * d + zeta * e + zeta2 * f).is_zero
    fx = zeta * (2 * a) + zeta2 * d + e
    fy = zeta2 * (2 * b) + zeta * d + f
    fz = ctx.scalar(2 * c) + zeta * e + zeta2 * f
    gradient_nonzero = not (fx.is_zero and fy.is_zero and fz.is_zero)
    direct = on_conic and gradient_nonzero and fx == zeta * fz and fy == zeta2 * fz

    if closed_form != direct:
        raise CertificationError(
            code="ORACLE_DISAGREEMENT",
            message="tangency condition and direct computation in Q(zeta_3) differ",
            details={"coefficients": [str(v) for v in (a, b, c, d, e, f)]},
        )
    return closed_form


def resultant_lhs(pd: ParamData) -> PolyQ:
    """res_Y(X^5 + Y^5 + 1, X^2 + Y^2 + 1 + t(XY + X + Y)) in Q[X]."""
    t = pd.t
    fermat = [X ** 5 + 1, PolyQ(), PolyQ(), PolyQ(), PolyQ(), PolyQ([1])]
    conic = [X ** 2 + t * X + 1, t * X + t, PolyQ([1])]
    return sylvester_resultant_polycoeff(fermat, conic)


def resultant_rhs(pd: ParamData) -> PolyQ:
    """(2 - t)(t^2 + t - 1)^2 (X^2 + X + 1)^2 f_t."""
    t = pd.t
    return (2 - t) * _Q(t) ** 2 * CYCLOTOMIC ** 2 * pd.f_t


def check_resultant_identity(pd: ParamData) -> bool:
    """Exact comparison of the eliminant with its factored form."""
    lhs = resultant_lhs(pd)
    ok = lhs == resultant_rhs(pd)
    if not ok:
        logger.error("resultant identity fails", extra={"t": str(pd.t)})
    return ok


def no_points_at_infinity(pd: ParamData) -> bool:
    """The line z = 0 misses F_5 and C_t together: res(X^5 + 1, X^2 + tX + 1) != 0."""
    return resultant(X ** 5 + 1, X ** 2 + pd.t * X + 1) != 0


def base_point_ok(pd: ParamData) -> bool:
    """P = [zeta_3, zeta_3^2, 1] lies on F_5 and on C_t, computed in Q(zeta_3)."""
    ctx = _cyclotomic_context()
    zeta = ctx.generator
    point = ProjectivePointNF(zeta, zeta * zeta, ctx.one)
    return point.on_fermat_quintic() and verify_conic_point(pd, point.x, point.y)


def line_intersection_real_roots(a: RationalLike, b: RationalLike) -> int:
    """Distinct real x with [x, ax + b, 1] on F_5 (real roots of X^5 + (aX+b)^5 + 1)."""
    h = X ** 5 + (Fraction(a) * X + Fraction(b)) ** 5 + 1
    if h.degree < 1:
        return 0
    return sturm_count(h.squarefree_part())


# ============================================================================
# TOTALLY REAL, GALOIS GROUP, QUADRATIC SUBFIELD
# ============================================================================

def totally_real_verdict(pd: ParamData) -> TotallyRealVerdict:
    """
    Two independent oracles for "all six roots of f_t are real".

    The Sturm count of f_t must be 6 exactly when d(t) > 0. The discriminant
    of g_t is also compared with its closed form, and the real-root count of
    g_t is reported alongside.

    Raises:
        CertificationError: DEGENERATE_PARAMETER at t = 1,
            ORACLE_DISAGREEMENT if the two oracles differ
    """
    if pd.is_degenerate:
        raise _degenerate(pd.t, "totally real test needs t != 1")
    count = sturm_count(pd.f_t)
    disc_positive = d_value(pd.t) > 0
    if (count == 6) != disc_positive:
        raise CertificationError(
            code="ORACLE_DISAGREEMENT",
            message="Sturm count and discriminant sign disagree",
            details={"t": str(pd.t), "sturm_count": count, "d_positive": disc_positive},
        )
    delta = discriminant(pd.g_t)
    matches = delta == delta_closed_form(pd.t)
    if not matches:
        logger.error("disc(g_t) differs from its closed form", extra={"t": str(pd.t)})
    cubic_roots = sturm_count(pd.g_t.squarefree_part())
    return TotallyRealVerdict(
        verdict=count == 6,
        sturm_count=count,
        disc_sign_positive=disc_positive,
        delta_matches_closed_form=matches,
        cubic_real_roots=cubic_roots,
    )


def galois_s3_verdict(
    pd: ParamData,
    irreducibility: Optional[IrreducibilityVerdict],
    six_roots_ok: Optional[bool],
) -> bool:
    """
    Gal(K_t/Q) is S3: g_t is an irreducible cubic with non-square discriminant.

    Together with irreducibility of f_t and the six roots lying in Q(alpha),
    this pins the group down.

    Raises:
        CertificationError: DEGENERATE_PARAMETER at t = 1, PREREQUISITE_MISSING
            when irreducibility or the six-root check has not succeeded
    """
    if pd.is_degenerate:
        raise _degenerate(pd.t, "K_1 = Q(zeta_3) has no S3 structure")
    if irreducibility is None or not irreducibility.is_irreducible or not six_roots_ok:
        raise CertificationError(
            code="PREREQUISITE_MISSING",
            message="Galois verdict needs irreducibility and the six-root splitting",
            details={"t": str(pd.t)},
        )
    if rational_roots(pd.g_t):
        return False
    return not is_rational_square(discriminant(pd.g_t))


def quad_kernel(pd: ParamData) -> int:
    """
    Signed squarefree kernel of d(t); different kernels mean different fields.

    Raises:
        CertificationError: ZERO_DISCRIMINANT if d(t) = 0
    """
    d = d_value(pd.t)
    if d == 0:
        raise CertificationError(
            code="ZERO_DISCRIMINANT",
            message="d(t) vanishes",
            details={"t": str(pd.t)},
        )
    sign = 1 if d > 0 else -1
    return sign * squarefree_kernel(d)


# ============================================================================
# NUMERIC POINTS AND r
# ============================================================================

def numeric_points(pd: ParamData, precision: RationalLike) -> List[NumericPoint]:
    """
    Rational approximations of the six real intersection points.

    Each root of f_t is isolated and refined to width <= precision; the
    point is (x_mid, sum a_i x_mid^i). Both curve equations vanish exactly
    at the true root, so a mean-value bound on the derivative over the
    interval bounds both residuals. Refinement continues until that bound
    is itself at most precision.

    Raises:
        CertificationError: NOT_TOTALLY_REAL unless f_t has six real roots
    """
    precision = Fraction(precision)
    if pd.is_degenerate:
        raise CertificationError(
            code="NOT_TOTALLY_REAL",
            message="K_1 = Q(zeta_3) is imaginary",
            details={"t": str(pd.t)},
        )
    intervals = isolate_real_roots(pd.f_t)
    if len(intervals) != 6:
        raise CertificationError(
            code="NOT_TOTALLY_REAL",
            message=f"f_t has {len(intervals)} real roots",
            details={"t": str(pd.t)},
        )

    t = pd.t
    y_of_x = PolyQ(pd.a)
    fermat = X ** 5 + y_of_x ** 5 + 1
    conic = X ** 2 + y_of_x ** 2 + 1 + t * (X * y_of_x + X + y_of_x)
    fermat_slope, conic_slope = fermat.derivative(), conic.derivative()

    points = []
    for index, interval in enumerate(intervals):
        width = precision
        refined = interval
        while True:
            refined = refine(refined, width)
            radius = max(abs(refined.lo), abs(refined.hi))
            slope = max(fermat_slope.abs_bound(radius), conic_slope.abs_bound(radius))
            bound = refined.width / 2 * slope
            if bound <= precision:
                break
            width = refined.width / 1024
        x_mid = refined.midpoint
        y_mid = y_of_x(x_mid)
        points.append(NumericPoint(
            index=index,
            x_lo=refined.lo,
            x_hi=refined.hi,
            x_mid=x_mid,
            y_mid=y_mid,
            fermat_residual=abs(x_mid ** 5 + y_mid ** 5 + 1),
            conic_residual=abs(x_mid ** 2 + y_mid ** 2 + 1 + t * (x_mid * y_mid + x_mid + y_mid)),
            error_bound=bound,
        ))
    logger.debug(f"six points refined to width {precision}", extra={"t": str(t)})
    return points


def isolate_r(width: RationalLike) -> IsolatingInterval:
    """
    Enclose r, the only positive root of 7X^5 - 10X^4 - 20X^3 - 4.

    One sign change in the coefficients means one positive root, and the
    polynomial is -100 at 2 and 347 at 3.
    """
    return refine(IsolatingInterval(Fraction(2), Fraction(3), R_POLYNOMIAL), Fraction(width))


def degree_patterns_allowed(patterns: Sequence[Tuple[int, DegreePattern]]) -> bool:
    """Every observed pattern is {1^6}, {2,2,2} or {3,3}."""
    return all(tuple(pattern.degrees) in ALLOWED_PATTERNS for _, pattern in patterns)
