"""Text renderings of colorings: letters, Graphviz dot and standalone SVG."""

from __future__ import annotations

import math
import string
from typing import Sequence
from xml.sax.saxutils import escape

from .coloring import Coloring
from .errors import DomainError, UsageError

FORMATS = ("ascii", "dot", "svg")
# red, yellow, blue first to echo the usual three-color drawings
PALETTE = (
    "#d62728",
    "#f2c80f",
    "#1f77b4",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#17becf",
)
LETTERS = string.ascii_uppercase + string.ascii_lowercase

NODE_R = 11.0
SPACING = 36.0
MARGIN = 20.0


def _fill(palette: Sequence[str], c: int) -> str:
    return palette[(c - 1) % len(palette)]


def render_ascii(f: Coloring) -> str:
    """One letter per vertex in vertex order; color 1 is ``A``."""
    if f.k > len(LETTERS):
        raise DomainError(f"ascii rendering supports at most {len(LETTERS)} colors")
    return "".join(LETTERS[c - 1] for c in f.colors)


def render_dot(f: Coloring, palette: Sequence[str] = PALETTE, name: str = "G") -> str:
    g = f.graph
    lines = [f"graph {name} {{"]
    lines.append('  graph [layout=circo];' if g.kind == "cycle" else '  graph [rankdir=LR];')
    lines.append("  node [shape=circle, style=filled, fontname=Helvetica];")
    for v, c in enumerate(f.colors):
        lines.append(f'  {name}_{v} [label="{v}", fillcolor="{_fill(palette, c)}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {name}_{u} -- {name}_{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layout(f: Coloring) -> tuple[list[tuple[float, float]], float, float]:
    n = f.graph.n
    if f.graph.kind == "path":
        pts = [(MARGIN + NODE_R + i * SPACING, MARGIN + NODE_R) for i in range(n)]
        width = 2 * (MARGIN + NODE_R) + (n - 1) * SPACING
        return pts, width, 2 * (MARGIN + NODE_R)
    radius = max(SPACING * n / (2 * math.pi), 2 * NODE_R)
    c = MARGIN + NODE_R + radius
    # vertex 0 at the top, increasing clockwise
    pts = [(c + radius * math.sin(2 * math.pi * v / n), c - radius * math.cos(2 * math.pi * v / n)) for v in range(n)]
    return pts, 2 * c, 2 * c


def _svg_body(f: Coloring, palette: Sequence[str], dx: float, dy: float) -> list[str]:
    pts, _, _ = _layout(f)
    out = [f'<g transform="translate({dx:.2f},{dy:.2f})">']
    for u, v in f.graph.sorted_edges():
        (x1, y1), (x2, y2) = pts[u], pts[v]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#333333" stroke-width="1.5"/>')
    for v, ((x, y), c) in enumerate(zip(pts, f.colors)):
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{NODE_R:.2f}" fill="{escape(_fill(palette, c))}" stroke="#000000"/>')
    out.append("</g>")
    return out


def render_svg(f: Coloring, palette: Sequence[str] = PALETTE) -> str:
    return render_svg_gallery([f], palette, columns=1)


def render_svg_gallery(fs: Sequence[Coloring], palette: Sequence[str] = PALETTE, columns: int = 6) -> str:
    if not fs:
        raise DomainError("nothing to render")
    sizes = [_layout(f)[1:] for f in fs]
    cell_w = max(w for w, _ in sizes)
    cell_h = max(h for _, h in sizes)
    cols = max(1, min(columns, len(fs)))
    rows = math.ceil(len(fs) / cols)
    width, height = cols * cell_w, rows * cell_h
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">'
    ]
    for i, f in enumerate(fs):
        out.extend(_svg_body(f, palette, (i % cols) * cell_w, (i // cols) * cell_h))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(fs: Sequence[Coloring], fmt: str, palette: Sequence[str] = PALETTE) -> str:
    """Render one coloring, or a gallery when several are given."""
    if fmt not in FORMATS:
        raise UsageError(f"unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")
    if not fs:
        raise DomainError("nothing to render")
    if fmt == "ascii":
        return "".join(render_ascii(f) + "\n" for f in fs)
    if fmt == "dot":
        if len(fs) == 1:
            return render_dot(fs[0], palette)
        return "".join(render_dot(f, palette, name=f"G{i}") for i, f in enumerate(fs))
    if len(fs) == 1:
        return render_svg(fs[0], palette)
    return render_svg_gallery(fs, palette)
