"""
Output formatting for certificates, point tables, searches and plots.

Certificates are JSON documents with a fixed key order and every number as
an exact "p/q" string, so two runs on the same t are byte-identical.
Floating point appears only in the SVG plot.
"""

import csv
import io
import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.arith import format_rational
from src.models import Certificate, FieldSearchResult, NumericPoint, ParamData
from src.polyq import IsolatingInterval, PolyQ

CSV_HEADER = ("t", "root_index", "x_lo", "x_hi", "x_mid", "y_mid")


def _poly(p: Optional[PolyQ]) -> Optional[List[str]]:
    return p.to_strings() if p is not None else None


def _patterns(patterns) -> List[Dict[str, Any]]:
    return [{"p": p, "degrees": list(pattern.degrees)} for p, pattern in patterns]


def decimal_floor(q: Fraction, digits: int) -> str:
    """q rounded down to ``digits`` decimal places, printed exactly."""
    return _decimal(math.floor(q * 10 ** digits), digits)


def decimal_ceil(q: Fraction, digits: int) -> str:
    """q rounded up to ``digits`` decimal places, printed exactly."""
    return _decimal(math.ceil(q * 10 ** digits), digits)


def _decimal(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


class CertificateRenderer:
    """Render certificates and related results as text."""

    def certificate_document(self, cert: Certificate) -> Dict[str, Any]:
        """
        Build the ordered certificate document.

        Args:
            cert: Certificate to serialize

        Returns:
            Dict in output order; all rationals as "p/q" strings
        """
        pd = cert.param
        verdict = cert.irreducible
        doc: Dict[str, Any] = {
            "t": format_rational(pd.t),
            "degenerate": cert.degenerate,
            "u": format_rational(pd.u),
            "v": format_rational(pd.v),
            "w": format_rational(pd.w),
            "s": format_rational(pd.s),
            "a": [format_rational(c) for c in pd.a],
            "f_t": pd.f_t.to_strings(),
            "g_t": pd.g_t.to_strings(),
            "irreducible": {
                "status": verdict.status,
                "witness_primes": list(verdict.witness_primes),
                "patterns": _patterns(verdict.patterns),
                "factor": _poly(verdict.factor),
            },
            "cyclotomic_remainder": format_rational(cert.cyclotomic_remainder),
            "cyclotomic_remainder_ok": cert.cyclotomic_remainder_ok,
            "resultant_identity_ok": cert.resultant_identity_ok,
            "no_points_at_infinity": cert.no_points_at_infinity,
            "six_roots_ok": cert.six_roots_ok,
            "fermat_ok": cert.fermat_ok,
            "conic_ok": cert.conic_ok,
            "orbit_ok": cert.orbit_ok,
            "recover_parameter_ok": cert.recover_parameter_ok,
            "trace_cubic_ok": cert.trace_cubic_ok,
            "galois_witness_ok": cert.galois_witness_ok,
            "totally_real": None,
            "galois_s3": cert.galois_s3,
            "base_point_ok": cert.base_point_ok,
            "quad_kernel": cert.quad_kernel,
            "degree_patterns": _patterns(cert.degree_patterns),
            "points": None,
            "notes": list(cert.notes),
            "failed_checks": cert.failed_checks(),
            "all_checks_pass": cert.all_checks_pass,
        }
        if cert.totally_real is not None:
            tr = cert.totally_real
            doc["totally_real"] = {
                "verdict": tr.verdict,
                "sturm_count": tr.sturm_count,
                "disc_sign_positive": tr.disc_sign_positive,
                "delta_matches_closed_form": tr.delta_matches_closed_form,
                "cubic_real_roots": tr.cubic_real_roots,
            }
        if cert.points is not None:
            doc["points"] = [
                {
                    "index": point.index,
                    "x_lo": format_rational(point.x_lo),
                    "x_hi": format_rational(point.x_hi),
                    "x_mid": format_rational(point.x_mid),
                    "y_mid": format_rational(point.y_mid),
                    "error_bound": format_rational(point.error_bound),
                }
                for point in cert.points
            ]
        return doc

    def to_json(self, cert: Certificate) -> str:
        """Certificate as an indented JSON document ending in a newline."""
        return json.dumps(self.certificate_document(cert), indent=2) + "\n"

    def search_to_json(self, result: FieldSearchResult) -> str:
        """All certificates of a search as one JSON document."""
        doc = {
            "height_bound": result.height_bound,
            "representatives": {
                str(kernel): format_rational(t) for kernel, t in result.representatives.items()
            },
            "certificates": [self.certificate_document(hit.certificate) for hit in result.hits],
        }
        return json.dumps(doc, indent=2) + "\n"

    def points_csv(self, t: Fraction, points: Sequence[NumericPoint]) -> str:
        """One CSV row per point: t, root_index, x_lo, x_hi, x_mid, y_mid."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for point in points:
            writer.writerow((
                format_rational(t),
                point.index,
                format_rational(point.x_lo),
                format_rational(point.x_hi),
                format_rational(point.x_mid),
                format_rational(point.y_mid),
            ))
        return buffer.getvalue()

    def search_table(self, result: FieldSearchResult) -> str:
        """
        Format a search result for display.

        The first parameter of each kernel is marked distinct; later ones
        share a quadratic subfield, which leaves field equality undetermined.
        """
        lines = []
        lines.append("=" * 80)
        lines.append(f"Admissible parameters with denominator <= {result.height_bound}")
        lines.append("=" * 80)
        if not result.hits:
            lines.append("No admissible parameters.")
        else:
            lines.append(f"{'t':>10}  {'kernel':>14}  {'checks':>7}  field")
            reps = result.representatives
            for hit in result.hits:
                status = "pass" if hit.certificate.all_checks_pass else "FAIL"
                if reps[hit.kernel] == hit.t:
                    field_note = "distinct"
                else:
                    field_note = f"same kernel as t={format_rational(reps[hit.kernel])} (undetermined)"
                lines.append(
                    f"{format_rational(hit.t):>10}  {hit.kernel:>14}  {status:>7}  {field_note}"
                )
        lines.append("")
        lines.append(f"Distinct kernels: {result.distinct_kernel_count}")
        lines.append("=" * 80)
        return "\n".join(lines) + "\n"

    def r_enclosure(self, interval: IsolatingInterval, digits: int) -> Tuple[str, str]:
        """
        The cell [a, a + 10^-digits] of the decimal grid that holds the root.

        The lower endpoint is the root truncated to ``digits`` places. When
        (lo, hi] straddles a grid point g, the sign of the target at g picks
        the side; an irrational root is never on the grid.
        """
        scale = 10 ** digits
        low, high = math.floor(interval.lo * scale), math.ceil(interval.hi * scale)
        target = interval.target
        if target(interval.hi) == 0:
            return decimal_floor(interval.hi, digits), decimal_ceil(interval.hi, digits)
        for cut in range(low + 1, high):
            g = Fraction(cut, scale)
            value = target(g)
            if value == 0:
                return _decimal(cut, digits), _decimal(cut, digits)
            if (value > 0) == (target(interval.hi) > 0):
                high = cut
                break
            low = cut
        return _decimal(low, digits), _decimal(high, digits)

    def points_svg(self, pd: ParamData, points: Sequence[NumericPoint], size: int = 600) -> str:
        """
        Static scatter of the six points over sampled real loci of F_5 and C_t.
        """
        t = float(pd.t)
        xs = [float(p.x_mid) for p in points]
        ys = [float(p.y_mid) for p in points]
        extent = max([3.0] + [abs(v) + 1.0 for v in xs + ys])

        def px(x: float) -> float:
            return (x + extent) / (2 * extent) * size

        def py(y: float) -> float:
            return size - (y + extent) / (2 * extent) * size

        def path(samples: List[Optional[Tuple[float, float]]], colour: str) -> str:
            parts, pen_down = [], False
            for sample in samples:
                if sample is None or abs(sample[1]) > extent:
                    pen_down = False
                    continue
                command = "L" if pen_down else "M"
                parts.append(f"{command}{px(sample[0]):.2f},{py(sample[1]):.2f}")
                pen_down = True
            return f'<path d="{" ".join(parts)}" fill="none" stroke="{colour}" stroke-width="1.5"/>'

        grid = [-extent + 2 * extent * i / 800 for i in range(801)]
        quintic_curve = []
        upper, lower = [], []
        for x in grid:
            value = 1 + x ** 5
            quintic_curve.append((x, -math.copysign(abs(value) ** 0.2, value)))
            disc = t * t * (x + 1) ** 2 - 4 * (x * x + t * x + 1)
            if disc < 0:
                upper.append(None)
                lower.append(None)
            else:
                root = math.sqrt(disc)
                upper.append((x, (-t * (x + 1) + root) / 2))
                lower.append((x, (-t * (x + 1) - root) / 2))

        body = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">',
            f'<rect width="{size}" height="{size}" fill="white"/>',
            f'<line x1="0" y1="{py(0):.2f}" x2="{size}" y2="{py(0):.2f}" stroke="#ccc"/>',
            f'<line x1="{px(0):.2f}" y1="0" x2="{px(0):.2f}" y2="{size}" stroke="#ccc"/>',
            path(quintic_curve, "#1f77b4"),
            path(upper, "#d62728"),
            path(lower, "#d62728"),
        ]
        for x, y in zip(xs, ys):
            body.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="4" fill="black"/>')
        body.append(
            f'<text x="10" y="20" font-size="14">t = {format_rational(pd.t)}</text>'
        )
        body.append("</svg>")
        return "\n".join(body) + "\n"
