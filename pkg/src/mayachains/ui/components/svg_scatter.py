from __future__ import annotations

from html import escape
from typing import Sequence


def svg_scatter(points: Sequence[tuple[float, float]], title: str = "", size: int = 480) -> str:
    """
    Render points of the complex plane as a static SVG scatter.

    The viewBox is centred on the origin and padded 5% beyond the largest
    coordinate, so conjugate pairs sit symmetrically about the real axis.

    Args:
        points (Sequence[tuple[float, float]]): (re, im) pairs.
        title (str, optional): Caption drawn in the top-left corner.
        size (int, optional): Width and height in pixels. Defaults to 480.

    Returns:
        str: The SVG document.
    """
    extent = max((max(abs(x), abs(y)) for x, y in points), default=0.0) or 1.0
    half = extent * 1.05
    r = half / 90
    stroke = half / 400
    dots = "\n".join(
        f'    <circle cx="{x:.12g}" cy="{-y:.12g}" r="{r:.6g}" />' for x, y in points
    )
    caption = (
        f'  <text x="{-half + 4 * r:.6g}" y="{-half + 8 * r:.6g}" font-size="{6 * r:.6g}" '
        f'fill="#333">{escape(title)}</text>\n'
        if title
        else ""
    )
    return f"""<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="{-half:.12g} {-half:.12g} {2 * half:.12g} {2 * half:.12g}">
  <rect x="{-half:.12g}" y="{-half:.12g}" width="{2 * half:.12g}" height="{2 * half:.12g}" fill="white" />
  <line x1="{-half:.12g}" y1="0" x2="{half:.12g}" y2="0" stroke="#bbb" stroke-width="{stroke:.6g}" />
  <line x1="0" y1="{-half:.12g}" x2="0" y2="{half:.12g}" stroke="#bbb" stroke-width="{stroke:.6g}" />
{caption}  <g fill="#1f4e9c">
{dots}
  </g>
</svg>
"""
