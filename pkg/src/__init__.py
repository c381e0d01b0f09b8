"""
Fermat quintic certification tools.

Exact construction and verification of degree-6 totally real points on
x^5 + y^5 + z^5 = 0 cut out by the conic pencil x^2 + y^2 + z^2 + t(xy + xz + yz).
"""

__version__ = "1.0.0"

from src.models import Certificate, CertificationError, CertifyOptions, ParamData
from src.polyq import PolyQ
from src.numberfield import NFElement, NumberFieldCtx
from src.certificate_service import CertificateService
from src.renderer import CertificateRenderer

__all__ = [
    "Certificate",
    "CertificationError",
    "CertifyOptions",
    "ParamData",
    "PolyQ",
    "NFElement",
    "NumberFieldCtx",
    "CertificateService",
    "CertificateRenderer",
]
