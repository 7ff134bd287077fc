"""SVG drawings of layouts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import escape

from .geometry import Layout, maximal_segments

PALETTES = {
    "pastel": ("#cfe2f3", "#d9ead3", "#fff2cc", "#f4cccc", "#d9d2e9", "#fce5cd", "#d0e0e3", "#ead1dc"),
    "gray": ("#eeeeee", "#dddddd", "#cccccc", "#e6e6e6", "#d4d4d4"),
}
HIGHLIGHT = "#d62728"


@dataclass(frozen=True)
class RenderOptions:
    """``highlight`` mixes rect ids (outlined) and maximal segment indices (stroked)."""

    width_px: int = 400
    label: bool = True
    highlight: frozenset = frozenset()
    palette: str = "pastel"

    def __post_init__(self):
        if self.width_px < 64:
            raise ValueError("width_px must be at least 64")
        if self.palette not in PALETTES:
            raise ValueError(f"unknown palette {self.palette!r}")
        object.__setattr__(self, "highlight", frozenset(self.highlight))


def _num(x) -> str:
    return format(float(x), ".6g")


def render_svg(layout: Layout, opts: RenderOptions | None = None) -> str:
    """Draw ``layout`` with y pointing up, scaled to ``opts.width_px``."""
    opts = opts or RenderOptions()
    b = layout.bbox
    scale = Fraction(opts.width_px) / b.width
    height = b.height * scale

    def X(x):
        return _num((x - b.x0) * scale)

    def Y(y):
        return _num((b.y1 - y) * scale)

    colors = PALETTES[opts.palette]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.width_px}" height="{_num(height)}" '
        f'viewBox="0 0 {opts.width_px} {_num(height)}">'
    ]
    for i, r in enumerate(layout.rects):
        out.append(
            f'<rect x="{X(r.x0)}" y="{Y(r.y1)}" width="{_num(r.width * scale)}" height="{_num(r.height * scale)}" '
            f'fill="{colors[i % len(colors)]}" stroke="#333333" stroke-width="1"/>'
        )
    for r in layout.rects:
        if r.id in opts.highlight:
            pts = " ".join(f"{X(x)},{Y(y)}" for x, y in r.corners())
            out.append(f'<polygon points="{pts}" fill="none" stroke="{HIGHLIGHT}" stroke-width="3"/>')
    wanted = sorted(h for h in opts.highlight if isinstance(h, int))
    if wanted:
        segs = maximal_segments(layout)
        for k in wanted:
            (x0, y0), (x1, y1) = segs[k].endpoints()
            out.append(
                f'<line x1="{X(x0)}" y1="{Y(y0)}" x2="{X(x1)}" y2="{Y(y1)}" stroke="{HIGHLIGHT}" stroke-width="4"/>'
            )
    if opts.label:
        size = max(8, opts.width_px // 30)
        for r in layout.rects:
            cx, cy = (r.x0 + r.x1) / 2, (r.y0 + r.y1) / 2
            out.append(
                f'<text x="{X(cx)}" y="{Y(cy)}" font-family="sans-serif" font-size="{size}" '
                f'text-anchor="middle" dominant-baseline="middle">{escape(r.id)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def segment_indices(layout: Layout, segments: Iterable) -> frozenset:
    """Indices into ``maximal_segments(layout)`` of the given segments."""
    segs = maximal_segments(layout)
    keys = {(s.orientation, s.axis_coord, s.lo, s.hi) for s in segments}
    return frozenset(i for i, s in enumerate(segs) if (s.orientation, s.axis_coord, s.lo, s.hi) in keys)
