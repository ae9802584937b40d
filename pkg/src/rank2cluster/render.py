"""Static renderings of a maximal Dyck path: ASCII, SVG, and TikZ.

Pure string emitters, no display loop.  All three show the rectangle grid,
the diagonal, the path, and the distinguished vertices v_j; an optional
overlay highlights one classified subpath (and, for a green one, its window
of preceding edges).
"""

from __future__ import annotations

from .dyck import Color, ColoredSubpath, DyckPath

_SVG_UNIT = 40
_SVG_PAD = 24
_OVERLAY_COLORS = {Color.BLUE: "#1f4fd8", Color.GREEN: "#1d8a34", Color.RED: "#d11f1f"}


def edge_endpoints(path: DyckPath, position: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lattice endpoints of the edge at a 1-based position along the path."""
    if not 1 <= position <= path.n_edges:
        raise ValueError(f"edge position {position} outside 1..{path.n_edges}")
    return path.vertex_coords[position - 1], path.vertex_coords[position]


def describe_overlay(overlay: ColoredSubpath) -> str:
    span = f"edges {overlay.edge_span[0]}..{overlay.edge_span[1]}"
    if overlay.color is Color.GREEN:
        window = f" window {overlay.window[0]}..{overlay.window[1]}"
        params = f" (m={overlay.green_m}, w={overlay.green_w})"
    else:
        window = ""
        params = ""
    return f"overlay alpha({overlay.i},{overlay.k}): {overlay.color.value}{params} {span}{window}"


def ascii_path(path: DyckPath, overlay: ColoredSubpath | None = None) -> str:
    """Character-grid picture.

    Legend: 'o' distinguished vertices, '+' other lattice points, '-'/'|'
    path edges, '='/'!' overlay span edges, '~'/':' green window edges,
    '.' cells the diagonal passes through.
    """
    width, height = path.width, path.height
    rows = [[" "] * (2 * width + 1) for _ in range(2 * height + 1)]

    def put_point(x: int, y: int, ch: str) -> None:
        rows[2 * (height - y)][2 * x] = ch

    def put_edge(position: int, east_ch: str, north_ch: str) -> None:
        (x0, y0), (x1, y1) = edge_endpoints(path, position)
        if y1 == y0:
            rows[2 * (height - y0)][2 * x0 + 1] = east_ch
        else:
            rows[2 * (height - y1) + 1][2 * x0] = north_ch

    for x in range(width + 1):
        for y in range(height + 1):
            put_point(x, y, "+")

    # Mark every cell whose interior the diagonal crosses (exact integer test
    # against y*width = x*height).
    for cx in range(width):
        for cy in range(height):
            if height * cx < width * (cy + 1) and height * (cx + 1) > width * cy:
                rows[2 * (height - cy) - 1][2 * cx + 1] = "."

    for position in range(1, path.n_edges + 1):
        put_edge(position, "-", "|")
    if overlay is not None:
        for position in overlay.edges():
            put_edge(position, "=", "!")
        for position in overlay.window_edges():
            put_edge(position, "~", ":")
    for j in range(height + 1):
        x, y = path.vertex(j)
        put_point(x, y, "o")

    header = f"r={path.r} n={path.n} word={path.word} width={width} height={height}"
    lines = [header]
    if overlay is not None:
        lines.append(describe_overlay(overlay))
    lines.extend("".join(row).rstrip() for row in rows)
    return "\n".join(lines) + "\n"


def svg_path(path: DyckPath, overlay: ColoredSubpath | None = None) -> str:
    width, height = path.width, path.height

    def px(x: int) -> int:
        return _SVG_PAD + _SVG_UNIT * x

    def py(y: int) -> int:
        return _SVG_PAD + _SVG_UNIT * (height - y)

    def points(coords) -> str:
        return " ".join(f"{px(x)},{py(y)}" for x, y in coords)

    total_w = 2 * _SVG_PAD + _SVG_UNIT * width
    total_h = 2 * _SVG_PAD + _SVG_UNIT * height
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
        f'viewBox="0 0 {total_w} {total_h}">',
        f"<!-- r={path.r} n={path.n} word={path.word} -->",
        '<g stroke="#cccccc" stroke-width="1">',
    ]
    for x in range(width + 1):
        parts.append(f'<line x1="{px(x)}" y1="{py(height)}" x2="{px(x)}" y2="{py(0)}"/>')
    for y in range(height + 1):
        parts.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(width)}" y2="{py(y)}"/>')
    parts.append("</g>")
    parts.append(
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(width)}" y2="{py(height)}" '
        'stroke="#888888" stroke-width="1.5"/>'
    )
    parts.append(
        f'<polyline points="{points(path.vertex_coords)}" '
        'fill="none" stroke="#000000" stroke-width="4"/>'
    )
    if overlay is not None:
        lo, hi = overlay.edge_span
        color = _OVERLAY_COLORS[overlay.color]
        parts.append(f"<!-- {describe_overlay(overlay)} -->")
        parts.append(
            f'<polyline points="{points(path.vertex_coords[lo - 1 : hi + 1])}" '
            f'fill="none" stroke="{color}" stroke-width="6"/>'
        )
        if overlay.window is not None:
            wlo, whi = overlay.window
            parts.append(
                f'<polyline points="{points(path.vertex_coords[wlo - 1 : whi + 1])}" '
                'fill="none" stroke="#e6a100" stroke-width="6" stroke-dasharray="6,4"/>'
            )
    for j in range(height + 1):
        x, y = path.vertex(j)
        parts.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="5" fill="#000000"/>')
        parts.append(f'<text x="{px(x) + 6}" y="{py(y) - 6}" font-size="12">v{j}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def tikz_path(path: DyckPath, overlay: ColoredSubpath | None = None) -> str:
    width, height = path.width, path.height
    parts = [
        f"% r={path.r} n={path.n} word={path.word}",
        "\\begin{tikzpicture}[scale=0.7]",
        f"  \\draw[gray!40,very thin] (0,0) grid ({width},{height});",
        f"  \\draw[gray] (0,0) -- ({width},{height});",
    ]
    coords = " -- ".join(f"({x},{y})" for x, y in path.vertex_coords)
    parts.append(f"  \\draw[line width=1.6pt] {coords};")
    if overlay is not None:
        parts.append(f"  % {describe_overlay(overlay)}")
        lo, hi = overlay.edge_span
        span = " -- ".join(f"({x},{y})" for x, y in path.vertex_coords[lo - 1 : hi + 1])
        parts.append(f"  \\draw[line width=2.4pt,{overlay.color.value}] {span};")
        if overlay.window is not None:
            wlo, whi = overlay.window
            window = " -- ".join(f"({x},{y})" for x, y in path.vertex_coords[wlo - 1 : whi + 1])
            parts.append(f"  \\draw[line width=2pt,orange,dashed] {window};")
    for j in range(height + 1):
        x, y = path.vertex(j)
        parts.append(f"  \\filldraw ({x},{y}) circle (2.2pt) node[above left] {{$v_{{{j}}}$}};")
    parts.append("\\end{tikzpicture}")
    return "\n".join(parts) + "\n"
