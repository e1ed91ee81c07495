"""SVG drawings of webs and marked matchings."""

import math
import os
from typing import Any, Dict, List, Optional

from .geometry import Point
from .projection import PLAIN, MarkedNonCrossingMatching
from .trips import separation_labels
from .web_builder import BLACK, HOURGLASS, HourglassWeb, strand_points

UNIT = 40.0
MARGIN = 30.0


def _real(p: Point) -> tuple:
    """Real-plane position of an S-frame point, in pixels (y grows downward)."""
    x = float(p.x) / 24.0 * math.sqrt(3) / 2.0
    y = float(p.y) / 16.0
    return (x * UNIT, -y * UNIT)


def _label_text(label) -> str:
    return "".join(str(x) for x in sorted(label)) if isinstance(label, frozenset) else str(label)


def web_svg(web: HourglassWeb, labels: Optional[Dict[int, Any]] = None) -> str:
    """SVG document of a web: outline, strands, vertices and optional edge labels."""
    pts = [_real(v.position) for v in web.vertices] + [_real(p) for p in web.outline]
    min_x = min(x for x, _ in pts) - MARGIN
    min_y = min(y for _, y in pts) - MARGIN
    width = max(x for x, _ in pts) - min_x + MARGIN
    height = max(y for _, y in pts) - min_y + MARGIN

    body: List[str] = []
    outline = " ".join(f"{x:.2f},{y:.2f}" for x, y in (_real(p) for p in web.outline))
    body.append(f'<polygon points="{outline}" fill="none" stroke="#bbbbbb" stroke-dasharray="4 3"/>')
    for e in web.edges:
        sides = (-1, 1) if e.kind == HOURGLASS else (0,)
        for side in sides:
            path = [web.vertices[e.black].position] + strand_points(web, e.id, side, e.black)
            coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in (_real(p) for p in path))
            body.append(f'<polyline points="{coords}" fill="none" stroke="#333333" stroke-width="1.5"/>')
        if labels is not None and e.id in labels:
            mx, my = _real(web.vertices[e.black].position)
            nx, ny = _real(web.vertices[e.white].position)
            body.append(f'<text x="{(mx + nx) / 2:.2f}" y="{(my + ny) / 2 - 3:.2f}" font-size="9" '
                        f'fill="#c0399b" text-anchor="middle">{_label_text(labels[e.id])}</text>')
    for v in web.vertices:
        x, y = _real(v.position)
        fill = "#000000" if v.color == BLACK else "#ffffff"
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.5" fill="{fill}" stroke="#000000"/>')
    for i, v in enumerate(web.boundary):
        x, y = _real(web.vertices[v].position)
        body.append(f'<text x="{x + 5:.2f}" y="{y - 5:.2f}" font-size="9">b{i + 1}</text>')

    return (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{min_x:.2f} {min_y:.2f} {width:.2f} {height:.2f}">\n'
            + "\n".join(body) + "\n</svg>\n")


def matching_svg(m: MarkedNonCrossingMatching) -> str:
    n = len(m.points)
    step = UNIT
    width = max(n, 1) * step + 2 * MARGIN
    base = MARGIN + n * step / 2.0
    body: List[str] = [f'<line x1="{MARGIN / 2:.2f}" y1="{base:.2f}" x2="{width - MARGIN / 2:.2f}" '
                       f'y2="{base:.2f}" stroke="#bbbbbb"/>']
    xs = [MARGIN + (k + 0.5) * step for k in range(n)]
    for e in m.edges:
        x1, x2 = xs[e.i - 1], xs[e.j - 1]
        r = (x2 - x1) / 2.0
        body.append(f'<path d="M {x1:.2f} {base:.2f} A {r:.2f} {r:.2f} 0 0 1 {x2:.2f} {base:.2f}" '
                    f'fill="none" stroke="#333333" stroke-width="1.5"/>')
        if e.mark != PLAIN:
            fill = "#ffffff" if e.mark == "white" else "#000000"
            body.append(f'<circle cx="{x1 + r:.2f}" cy="{base - r:.2f}" r="4" fill="{fill}" stroke="#000000"/>')
    for k, p in enumerate(m.points):
        fill = "#000000" if p.color == BLACK else "#ffffff"
        body.append(f'<circle cx="{xs[k]:.2f}" cy="{base:.2f}" r="4" fill="{fill}" stroke="#000000"/>')
        body.append(f'<text x="{xs[k]:.2f}" y="{base + 16:.2f}" font-size="10" '
                    f'text-anchor="middle">{p.label}</text>')
    height = base + 2 * MARGIN
    return (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {width:.2f} {height:.2f}">\n'
            + "\n".join(body) + "\n</svg>\n")


def _write(content: str, output_file: str) -> None:
    # Ensure directory exists
    os.makedirs(os.path.dirname(os.path.abspath(output_file)), exist_ok=True)
    with open(output_file, "w", encoding="utf-8") as f:
        f.write(content)


def render_web_svg(web: HourglassWeb, output_file: str = "web.svg", with_labels: bool = True) -> Dict[str, Any]:
    """
    Draw a web to an SVG file.

    Args:
        web: The web to draw.
        output_file: Path to save the SVG file.
        with_labels: Annotate edges with their separation labels.

    Returns:
        Dict: Result with file path and number of vertices, or an error.
    """
    try:
        if not web.vertices:
            return {"error": "Web has no vertices to draw"}
        labels = separation_labels(web) if with_labels else None
        _write(web_svg(web, labels), output_file)
        return {"file": output_file, "num_vertices": len(web.vertices)}
    except Exception as e:
        return {"error": f"Failed to render web: {str(e)}"}


def render_matching_svg(m: MarkedNonCrossingMatching, output_file: str = "matching.svg") -> Dict[str, Any]:
    try:
        _write(matching_svg(m), output_file)
        return {"file": output_file, "num_edges": len(m.edges)}
    except Exception as e:
        return {"error": f"Failed to render matching: {str(e)}"}
