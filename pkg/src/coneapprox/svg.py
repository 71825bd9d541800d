"""Hand-emitted SVG for guarantee-versus-inner-angle plots.

No plotting dependency: the figure is lines, circles, and text.  The axes
are fixed to the meaningful domain (inner angle from pi/2 to pi, factor
from 1 to 2, plus a small margin) so output is deterministic for identical
input.  Rows supply three series: the guarantee curve (solid), the linear
rule of thumb (dashed), and optional empirical factors (circles).
"""

from __future__ import annotations

import math

WIDTH = 640
HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 20
MARGIN_TOP = 20
MARGIN_BOTTOM = 50

X_MIN = 0.5 * math.pi
X_MAX = math.pi
Y_MIN = 0.95
Y_MAX = 2.05


def data_to_svg(gamma: float, factor: float) -> tuple[float, float]:
    """Map a (gamma, factor) data point to SVG pixel coordinates."""
    px = MARGIN_LEFT + (gamma - X_MIN) / (X_MAX - X_MIN) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    py = HEIGHT - MARGIN_BOTTOM - (factor - Y_MIN) / (Y_MAX - Y_MIN) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    return px, py


def svg_to_data(px: float, py: float) -> tuple[float, float]:
    """Inverse of data_to_svg."""
    gamma = X_MIN + (px - MARGIN_LEFT) / (WIDTH - MARGIN_LEFT - MARGIN_RIGHT) * (X_MAX - X_MIN)
    factor = Y_MIN + (HEIGHT - MARGIN_BOTTOM - py) / (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) * (Y_MAX - Y_MIN)
    return gamma, factor


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _polyline(points: list[tuple[float, float]], cls: str, dashed: bool = False) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    dash = ' stroke-dasharray="6,4"' if dashed else ""
    return f'<polyline class="{cls}" fill="none" stroke="black" stroke-width="1.5"{dash} points="{pts}"/>'


def render_sweep_svg(rows: list[dict]) -> str:
    """Render sweep rows (gamma, empirical_alpha, theory_bound, rule_of_thumb).

    Rows are sorted by gamma; rows whose empirical_alpha is NaN contribute to
    the curves only.  With no rows at all, only the axes are drawn.
    """
    rows = sorted(rows, key=lambda r: (r["gamma"], r.get("instance_id", "")))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    # Axes.
    x0, y0 = data_to_svg(X_MIN, Y_MIN)
    x1, y1 = data_to_svg(X_MAX, Y_MAX)
    parts.append(f'<line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y0)}" stroke="black"/>')
    parts.append(f'<line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" y2="{_fmt(y1)}" stroke="black"/>')
    for g, label in ((0.5 * math.pi, "pi/2"), (0.75 * math.pi, "3pi/4"), (math.pi, "pi")):
        px, _ = data_to_svg(g, Y_MIN)
        parts.append(f'<line x1="{_fmt(px)}" y1="{_fmt(y0)}" x2="{_fmt(px)}" y2="{_fmt(y0 + 5)}" stroke="black"/>')
        parts.append(f'<text x="{_fmt(px)}" y="{_fmt(y0 + 20)}" font-size="12" text-anchor="middle">{label}</text>')
    for f in (1.0, 1.25, 1.5, 1.75, 2.0):
        _, py = data_to_svg(X_MIN, f)
        parts.append(f'<line x1="{_fmt(x0 - 5)}" y1="{_fmt(py)}" x2="{_fmt(x0)}" y2="{_fmt(py)}" stroke="black"/>')
        parts.append(f'<text x="{_fmt(x0 - 8)}" y="{_fmt(py + 4)}" font-size="12" text-anchor="end">{f:g}</text>')
    parts.append(
        f'<text x="{_fmt((x0 + x1) / 2)}" y="{_fmt(HEIGHT - 10)}" font-size="13" text-anchor="middle">'
        "inner angle</text>"
    )
    parts.append(
        f'<text x="15" y="{_fmt((y0 + y1) / 2)}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 15 {_fmt((y0 + y1) / 2)})">approximation factor</text>'
    )
    if rows:
        theory = [data_to_svg(r["gamma"], r["theory_bound"]) for r in rows]
        rule = [data_to_svg(r["gamma"], r["rule_of_thumb"]) for r in rows]
        parts.append(_polyline(theory, "theory"))
        parts.append(_polyline(rule, "rule", dashed=True))
        for r in rows:
            e = r.get("empirical_alpha")
            if e is None or (isinstance(e, float) and math.isnan(e)):
                continue
            px, py = data_to_svg(r["gamma"], e)
            parts.append(f'<circle class="empirical" cx="{_fmt(px)}" cy="{_fmt(py)}" r="3" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
