"""SVG rendering of the fundamental square with bridge, beta and alpha chords.

The boundary circle [0, L) is laid around a square whose corners are the
four copies of y: y1 top left, y2 top right, y3 bottom right, y4 bottom left.
Chords are straight segments, which cross exactly when their endpoints
interleave because the square is convex.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .core import Basepoints
from .diagram import ALPHA, BETA, BRIDGE, Chord, realize
from .pipeline import PipelineReport

SIZE = 400
MARGIN = 40

STYLE = (
    ".frame{fill:none;stroke:#000;stroke-width:1.5}"
    ".tick{stroke:#666;stroke-width:1}"
    ".bridge{stroke:#c0392b;stroke-width:2.5;fill:none}"
    ".beta{stroke:#2471a3;stroke-width:1.5;fill:none}"
    ".alpha{stroke:#1e8449;stroke-width:2;fill:none;stroke-dasharray:6 3}"
    ".xpt{fill:#000;stroke:#000}"
    ".ypt{fill:#fff;stroke:#000;stroke-width:1.5}"
    "text{font-family:sans-serif;font-size:11px}"
)


def _fmt(v: Fraction) -> str:
    """Fixed three-decimal rendering of an exact coordinate."""
    scaled = round(v * 1000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 1000}.{scaled % 1000:03d}"


def boundary_xy(value: Fraction, bp: Basepoints) -> tuple[Fraction, Fraction]:
    """Point of the square for a boundary coordinate in [0, L)."""
    corners = [(0, 0), (SIZE, 0), (SIZE, SIZE), (0, SIZE), (0, 0)]
    edges = [bp.y1, bp.y2, bp.y3, bp.y4, bp.L]
    value = Fraction(value) % bp.L
    for i in range(4):
        lo, hi = edges[i], edges[i + 1]
        if lo <= value <= hi:
            f = (value - lo) / (hi - lo)
            (x0, y0), (x1, y1) = corners[i], corners[i + 1]
            return (MARGIN + x0 + f * (x1 - x0), MARGIN + y0 + f * (y1 - y0))
    raise ValueError(value)


def _line(chord: Chord, bp: Basepoints) -> str:
    (xa, ya) = boundary_xy(chord.tail.value, bp)
    (xb, yb) = boundary_xy(chord.head.value, bp)
    return (f'<line class="{chord.role}" x1="{_fmt(xa)}" y1="{_fmt(ya)}" '
            f'x2="{_fmt(xb)}" y2="{_fmt(yb)}"/>')


def render_svg(report: PipelineReport, stage: int | None = None) -> str:
    """SVG 1.1 document for the final diagram or for stage ``stage`` (0 = alpha and beta_0 only)."""
    d = report.diagram
    if d is None:
        raise ValueError(f"report for {report.form} has no diagram ({report.status})")
    bp = d.basepoints
    if stage is None:
        cd = report.chords or realize(d)
        chords = list(cd.chords)
    else:
        chords = list(realize(d, stage=stage).chords)
    full = SIZE + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{full}" height="{full}" '
        f'viewBox="0 0 {full} {full}">',
        f"<title>{escape(str(report.form))}</title>",
        f"<style>{STYLE}</style>",
        f'<rect class="frame" x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}"/>',
        '<g id="ticks">',
    ]
    cx = cy = Fraction(MARGIN + SIZE // 2)
    for k in range(bp.L):
        x, y = boundary_xy(Fraction(k), bp)
        # short tick pointing toward the centre
        dx, dy = cx - x, cy - y
        norm = max(abs(dx), abs(dy)) or 1
        x2, y2 = x + 5 * dx / norm, y + 5 * dy / norm
        out.append(f'<line class="tick" x1="{_fmt(x)}" y1="{_fmt(y)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    for role in (BRIDGE, BETA, ALPHA):
        out.append(f'<g id="{role}">')
        out.extend(_line(c, bp) for c in chords if c.role == role)
        out.append("</g>")
    out.append('<g id="basepoints">')
    for name, p in bp.named().items():
        x, y = boundary_xy(Fraction(p), bp)
        cls = "xpt" if name.startswith("x") else "ypt"
        out.append(f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="5"/>')
        tx, ty = x + (cx - x) / 12, y + (cy - y) / 12
        out.append(f'<text x="{_fmt(tx)}" y="{_fmt(ty)}">{name}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

