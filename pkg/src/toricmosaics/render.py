"""ASCII and SVG pictures of mosaics.

ASCII output uses a fixed 3x3 character block per tile kind.  SVG output
draws arcs as quarter circles and crossings with a gap on the under
strand; each visible crossing's gap carries class "gap" so under-strand
markers can be counted in the document.  With ``highlight_hidden`` the
torus closure arcs are sketched outside the grid, the row-closure strand
passing over the column-closure strand at each induced crossing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mosaic import Mosaic, boundary_counts, is_suitably_connected
from .tiles import BITS, LEFT, TOP

_GLYPHS = {
    0: ("   ", "   ", "   "),
    1: ("   ", "-. ", " | "),
    2: ("   ", " .-", " | "),
    3: (" | ", " '-", "   "),
    4: (" | ", "-' ", "   "),
    5: ("   ", "---", "   "),
    6: (" | ", " | ", " | "),
    7: (" |.", "-' ", " | "),
    8: (".| ", " '-", " | "),
    9: (" | ", "-|-", " | "),
    10: (" | ", "---", " | "),
}


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"  # "ascii" | "svg"
    cell_size: int = 40
    show_grid: bool = True
    highlight_hidden: bool = False

    def __post_init__(self):
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")


def render(m: Mosaic, opts: RenderOptions = RenderOptions()) -> str:
    if opts.format == "ascii":
        return render_ascii(m)
    return render_svg(m, opts)


def render_ascii(m: Mosaic) -> str:
    lines = []
    for row in m.cells:
        blocks = [_GLYPHS[k] for k in row]
        for r in range(3):
            lines.append("".join(b[r] for b in blocks))
    return "\n".join(lines)


def _tile_svg(kind: int, x: float, y: float, s: float) -> list[str]:
    """Path elements for one tile with its upper-left corner at (x, y)."""
    half = s / 2
    cx, cy = x + half, y + half
    mid = {LEFT: (x, cy), TOP: (cx, y), 2: (x + s, cy), 3: (cx, y + s)}
    arc = lambda a, b, sweep: (
        f'<path d="M {a[0]} {a[1]} A {half} {half} 0 0 {sweep} {b[0]} {b[1]}" class="strand"/>'
    )
    line = lambda a, b, cls="strand": (
        f'<path d="M {a[0]} {a[1]} L {b[0]} {b[1]}" class="{cls}"/>'
    )
    L, T, R, B = mid[0], mid[1], mid[2], mid[3]
    gap = s / 6
    parts: list[str] = []
    if kind == 1:
        parts.append(arc(L, B, 0))
    elif kind == 2:
        parts.append(arc(B, R, 0))
    elif kind == 3:
        parts.append(arc(T, R, 1))
    elif kind == 4:
        parts.append(arc(L, T, 1))
    elif kind == 5:
        parts.append(line(L, R))
    elif kind == 6:
        parts.append(line(T, B))
    elif kind == 7:
        parts.append(arc(T, R, 1))
        parts.append(arc(L, B, 0))
    elif kind == 8:
        parts.append(arc(L, T, 1))
        parts.append(arc(B, R, 0))
    elif kind == 9:
        parts.append(line(T, B))
        parts.append(line(L, (cx - gap, cy)))
        parts.append(line((cx + gap, cy), R))
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{gap}" class="gap"/>')
    elif kind == 10:
        parts.append(line(L, R))
        parts.append(line(T, (cx, cy - gap)))
        parts.append(line((cx, cy + gap), B))
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{gap}" class="gap"/>')
    return parts


def render_svg(m: Mosaic, opts: RenderOptions = RenderOptions(format="svg")) -> str:
    s = float(opts.cell_size)
    n = m.n
    margin = s * (1.5 if not opts.highlight_hidden else 3.0)
    width = n * s + 2 * margin
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{width:.0f}" '
        f'viewBox="{-margin} {-margin} {width} {width}">',
        "<style>.strand{stroke:#222;stroke-width:2;fill:none}"
        ".gap{fill:none;stroke:none}"
        ".grid{stroke:#bbb;stroke-width:0.5;fill:none}"
        ".closure{stroke:#c33;stroke-width:1.5;fill:none;stroke-dasharray:4 3}</style>",
    ]
    if opts.show_grid:
        for k in range(n + 1):
            parts.append(f'<path d="M 0 {k*s} H {n*s}" class="grid"/>')
            parts.append(f'<path d="M {k*s} 0 V {n*s}" class="grid"/>')
    for i in range(n):
        for j in range(n):
            parts.extend(_tile_svg(m.cells[i][j], j * s, i * s, s))
    if opts.highlight_hidden and is_suitably_connected(m, "toric"):
        a, b = boundary_counts(m)
        side_rows = [i for i in range(1, n + 1) if BITS[m.cells[i - 1][0]][LEFT]]
        top_cols = [j for j in range(1, n + 1) if BITS[m.cells[0][j - 1]][TOP]]
        for idx, j in enumerate(top_cols):
            d = s * 0.45 * (idx + 1)
            x = (j - 0.5) * s
            parts.append(
                f'<path d="M {x} {n*s} V {n*s+d} H {-d} V {-d} H {x} V 0" class="closure"/>'
            )
        for idx, i in enumerate(side_rows):
            d = s * 0.45 * (len(top_cols) + idx + 1)
            y = (i - 0.5) * s
            parts.append(
                f'<path d="M {n*s} {y} H {n*s+d} V {n*s+d} H {-d} V {y} H 0" class="closure"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
