"""
Arithmetic in the quotient ring Q[X]/(f) for a squarefree modulus f.

Used for Q(alpha) with alpha a root of f_t (where beta and the other
roots live) and for Q(zeta_3) with modulus X^2 + X + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Union

from src.models import CertificationError
from src.polyq import PolyQ

Operand = Union["NFElement", Fraction, int]


class NumberFieldCtx:
    """
    The ring Q[X]/(modulus); the modulus is stored monic.

    Raises:
        CertificationError: DEGREE_TOO_SMALL for a constant modulus,
            NOT_SQUAREFREE when the modulus has a repeated factor
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus: PolyQ):
        if modulus.degree < 1:
            raise CertificationError(
                code="DEGREE_TOO_SMALL",
                message="number field modulus must have degree >= 1",
                details={"modulus": str(modulus)},
            )
        if not modulus.is_squarefree():
            raise CertificationError(
                code="NOT_SQUAREFREE",
                message="number field modulus has a repeated factor",
                details={"modulus": str(modulus)},
            )
        self.modulus = modulus.monic()

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumberFieldCtx):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"NumberFieldCtx({self.modulus})"

    def element(self, rep: Union[PolyQ, Sequence[Union[Fraction, int]]]) -> "NFElement":
        if not isinstance(rep, PolyQ):
            rep = PolyQ(rep)
        return NFElement(self, rep)

    def scalar(self, c: Union[Fraction, int]) -> "NFElement":
        return NFElement(self, PolyQ([c]))

    @property
    def generator(self) -> "NFElement":
        """The residue class of X."""
        return NFElement(self, PolyQ.x())

    @property
    def one(self) -> "NFElement":
        return self.scalar(1)

    @property
    def zero(self) -> "NFElement":
        return self.scalar(0)

    def _own(self, a: "NFElement") -> None:
        if a.ctx != self:
            raise CertificationError(
                code="CONTEXT_MISMATCH",
                message="element belongs to a different number field",
                details={"expected": str(self.modulus), "got": str(a.ctx.modulus)},
            )

    def eval_poly(self, p: PolyQ, a: "NFElement") -> "NFElement":
        """p(a) by Horner, reduced after every step."""
        self._own(a)
        result = self.zero
        for c in reversed(p.coeffs):
            result = result * a + c
        return result

    def product_of_linears(self, roots: Sequence["NFElement"]) -> List["NFElement"]:
        """
        Coefficients (lowest first) of prod (X - r) over this field.

        An empty list of roots gives the constant polynomial 1.
        """
        coeffs: List[NFElement] = [self.one]
        for r in roots:
            self._own(r)
            shifted = [self.zero] + coeffs
            for i, c in enumerate(coeffs):
                shifted[i] = shifted[i] - c * r
            coeffs = shifted
        return coeffs


class NFElement:
    """
    Element of Q[X]/(modulus), held as its reduced representative.

    Example:
        >>> ctx = NumberFieldCtx(PolyQ([1, 1, 1]))
        >>> z = ctx.generator
        >>> z * z == -z - 1
        True
    """

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: NumberFieldCtx, rep: PolyQ):
        self.ctx = ctx
        self.rep = rep % ctx.modulus if rep.degree >= ctx.degree else rep

    def _coerce(self, other: Operand) -> "NFElement":
        if isinstance(other, NFElement):
            if other.ctx != self.ctx:
                raise CertificationError(
                    code="CONTEXT_MISMATCH",
                    message="operands belong to different number fields",
                    details={"left": str(self.ctx.modulus), "right": str(other.ctx.modulus)},
                )
            return other
        return self.ctx.scalar(other)

    def __add__(self, other: Operand) -> "NFElement":
        return NFElement(self.ctx, self.rep + self._coerce(other).rep)

    __radd__ = __add__

    def __neg__(self) -> "NFElement":
        return NFElement(self.ctx, -self.rep)

    def __sub__(self, other: Operand) -> "NFElement":
        return NFElement(self.ctx, self.rep - self._coerce(other).rep)

    def __rsub__(self, other: Operand) -> "NFElement":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "NFElement":
        return NFElement(self.ctx, self.rep * self._coerce(other).rep)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        """
        Multiplicative inverse via the extended Euclidean algorithm.

        Raises:
            CertificationError: NOT_INVERTIBLE; details["gcd"] is the common
                factor with the modulus, a witness that the modulus is reducible
        """
        g, s, _ = self.rep.xgcd(self.ctx.modulus)
        if self.is_zero or g.degree > 0:
            witness = self.ctx.modulus if self.is_zero else g
            raise CertificationError(
                code="NOT_INVERTIBLE",
                message="element shares a factor with the modulus",
                details={"gcd": str(witness), "modulus": str(self.ctx.modulus)},
            )
        return NFElement(self.ctx, s)

    def __truediv__(self, other: Operand) -> "NFElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Operand) -> "NFElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "NFElement":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.ctx.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.rep == PolyQ([other])
        if not isinstance(other, NFElement):
            return NotImplemented
        return self.ctx == other.ctx and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.ctx, self.rep))

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    @property
    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def rational_value(self) -> Fraction:
        """
        The element as a rational number.

        Raises:
            CertificationError: NON_RATIONAL_VALUE if the representative is not constant
        """
        if not self.is_rational:
            raise CertificationError(
                code="NON_RATIONAL_VALUE",
                message="element is not rational",
                details={"representative": str(self.rep)},
            )
        return self.rep.coeff(0)

    def to_strings(self) -> Dict[str, List[str]]:
        """Coefficients as "p/q" strings, tagged with the modulus."""
        return {"modulus": self.ctx.modulus.to_strings(), "coeffs": self.rep.to_strings()}

    def __str__(self) -> str:
        return str(self.rep).replace("X", "a")

    def __repr__(self) -> str:
        return f"NFElement({self.rep} mod {self.ctx.modulus})"


@dataclass(frozen=True)
class ProjectivePointNF:
    """Point [x, y, z] of the projective plane over a number field."""

    x: NFElement
    y: NFElement
    z: NFElement

    @property
    def is_trivial(self) -> bool:
        """Trivial Fermat points have a vanishing coordinate."""
        return self.x.is_zero or self.y.is_zero or self.z.is_zero

    def swapped(self) -> "ProjectivePointNF":
        return ProjectivePointNF(self.y, self.x, self.z)

    def on_fermat_quintic(self) -> bool:
        return (self.x ** 5 + self.y ** 5 + self.z ** 5).is_zero
