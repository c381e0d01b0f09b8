"""
Pytest configuration and shared fixtures for the certification test suite.

Provides the golden parameter t = 5/2, number-field contexts, a seeded
random source and a sympy converter used as an independent oracle.
"""

import random
from fractions import Fraction
from typing import Callable

import pytest
import sympy as sp
from dotenv import load_dotenv

from src.certificate_service import CertificateService
from src.models import CertifyOptions, ParamData
from src.numberfield import NumberFieldCtx
from src.polyq import PolyQ
from src.quintic import build_params
from src.renderer import CertificateRenderer


# Load test environment variables
load_dotenv()

SYMBOL = sp.Symbol("x")


@pytest.fixture
def golden_t() -> Fraction:
    """The parameter of the worked example."""
    return Fraction(5, 2)


@pytest.fixture
def params_5_2(golden_t: Fraction) -> ParamData:
    """ParamData at t = 5/2."""
    return build_params(golden_t)


@pytest.fixture
def field_5_2(params_5_2: ParamData) -> NumberFieldCtx:
    """Q(alpha) with alpha a root of f_{5/2}."""
    return NumberFieldCtx(params_5_2.f_t)


@pytest.fixture
def zeta_ctx() -> NumberFieldCtx:
    """Q(zeta_3) = Q[X]/(X^2 + X + 1)."""
    return NumberFieldCtx(PolyQ([1, 1, 1]))


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source so sweeps are reproducible."""
    return random.Random(20240601)


@pytest.fixture
def random_t(rng: random.Random) -> Callable[[], Fraction]:
    """Draw rationals p/q with |p|, q <= 50, avoiding 1 and 2."""
    def draw() -> Fraction:
        while True:
            t = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            if t not in (1, 2):
                return t
    return draw


@pytest.fixture
def to_sympy() -> Callable[[PolyQ], sp.Poly]:
    """Convert a PolyQ into a sympy Poly over QQ in the symbol x."""
    def convert(p: PolyQ) -> sp.Poly:
        expr = sum(
            sp.Rational(c.numerator, c.denominator) * SYMBOL ** i
            for i, c in enumerate(p.coeffs)
        )
        return sp.Poly(expr, SYMBOL, domain="QQ")
    return convert


@pytest.fixture
def options() -> CertifyOptions:
    """Default run options, independent of the environment."""
    return CertifyOptions()


@pytest.fixture
def service(options: CertifyOptions) -> CertificateService:
    """Certificate service with default options."""
    return CertificateService(options)


@pytest.fixture
def renderer() -> CertificateRenderer:
    """Output renderer."""
    return CertificateRenderer()
