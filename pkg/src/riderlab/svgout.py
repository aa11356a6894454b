"""Deterministic SVG rendering of generated configurations and trajectories.

Plain string building, no dependencies: identical input yields byte-identical
output. Pieces are numbered disks on an integer grid at generator scale;
active move equations are drawn as attack segments.
"""

from __future__ import annotations

from fractions import Fraction

from .configs import GeneratedConfig, Trajectory
from .exactmath import lcm_all

_CELL = 24
_MARGIN = 18
_STYLE = (
    "line.grid{stroke:#ccc;stroke-width:1}"
    "line.attack{stroke:#c33;stroke-width:1.5}"
    "circle.piece{fill:#1a4f8b;stroke:#000;stroke-width:1}"
    "text.lbl{font:10px sans-serif;fill:#fff;text-anchor:middle}"
)


def _fmt(v) -> str:
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    out = f"{float(f):.4f}".rstrip("0")
    return out[:-1] if out.endswith(".") else out


def _render(points, width, height, segments, labels) -> str:
    w = width * _CELL + 2 * _MARGIN
    h = height * _CELL + 2 * _MARGIN

    def pxf(x):
        return _MARGIN + Fraction(x) * _CELL

    def pyf(y):
        return _MARGIN + (Fraction(height) - Fraction(y)) * _CELL

    def px(x):
        return _fmt(pxf(x))

    def py(y):
        return _fmt(pyf(y))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" '
        f'width="{w}" height="{h}" data-extent="{width}x{height}">',
        f"<style>{_STYLE}</style>",
    ]
    for gx in range(width + 1):
        parts.append(f'<line class="grid" x1="{px(gx)}" y1="{py(0)}" '
                     f'x2="{px(gx)}" y2="{py(height)}"/>')
    for gy in range(height + 1):
        parts.append(f'<line class="grid" x1="{px(0)}" y1="{py(gy)}" '
                     f'x2="{px(width)}" y2="{py(gy)}"/>')
    for (a, b) in segments:
        parts.append(f'<line class="attack" x1="{px(a[0])}" y1="{py(a[1])}" '
                     f'x2="{px(b[0])}" y2="{py(b[1])}"/>')
    for idx, (x, y) in enumerate(points, start=1):
        parts.append(f'<circle class="piece" cx="{px(x)}" cy="{py(y)}" r="8"/>')
        if labels:
            parts.append(f'<text class="lbl" x="{px(x)}" y="{_fmt(pyf(y) + 3)}">'
                         f"{idx}</text>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(obj, labels: bool = True) -> str:
    """Standalone SVG for a GeneratedConfig or Trajectory.

    The grid is the configuration's integer lattice at generator scale; the
    root element carries data-extent="WxH" with the bounding box in grid
    units.
    """
    if isinstance(obj, GeneratedConfig):
        pts = obj.positions
        width = max(x for x, _ in pts) or 1
        height = max(y for _, y in pts) or 1
        segments = [(pts[i - 1], pts[j - 1]) for (i, j, _) in obj.move_equations]
        return _render(pts, width, height, segments, labels)
    if isinstance(obj, Trajectory):
        scale = lcm_all(c.denominator for p in obj.points for c in p)
        pts = [(p[0] * scale, p[1] * scale) for p in obj.points]
        width = max(int(x) for x, _ in pts) or 1
        height = max(int(y) for _, y in pts) or 1
        segments = list(zip(pts, pts[1:]))
        return _render(pts, width, height, segments, labels)
    raise TypeError("emit_svg takes a GeneratedConfig or a Trajectory")
