"""Static SVG rendering of a circle spectrum.

The document is a small SVG 1.1 subset: the root svg element, g groups
(axes, circles, points, optional labels), circle outlines for the
spectrum circles, filled circle disks for the points, and two axis
lines.  Coordinates grow upward: the y axis is flipped relative to SVG's
screen convention so counterclockwise stays counterclockwise.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .project import CircleSpectrum

_POINT_RADIUS = 2.5


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render_spectrum(
    spectrum: CircleSpectrum | None,
    size: int = 640,
    labels: bool = False,
) -> str:
    """Render a circle spectrum to SVG text.

    The viewport is auto-scaled to 1.1x the largest radius.  Passing None
    (or a spectrum with no circles) yields a valid document showing the
    axes only.
    """
    if size < 64:
        raise ValueError("size must be at least 64 pixels")

    circles = spectrum.circles if spectrum is not None else ()
    rmax = max((c.radius for c in circles), default=0.0)
    half = float(size) / 2.0
    scale = half / (1.1 * rmax) if rmax > 0 else 1.0

    def sx(x: float) -> float:
        return half + scale * x

    def sy(y: float) -> float:
        return half - scale * y  # flip: math ccw = screen ccw

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": str(size),
            "height": str(size),
            "viewBox": f"0 0 {size} {size}",
        },
    )
    axes = ET.SubElement(svg, "g", {"id": "axes", "stroke": "#cccccc", "stroke-width": "1"})
    ET.SubElement(axes, "line", {"x1": "0", "y1": _fmt(half), "x2": str(size), "y2": _fmt(half)})
    ET.SubElement(axes, "line", {"x1": _fmt(half), "y1": "0", "x2": _fmt(half), "y2": str(size)})

    rings = ET.SubElement(
        svg, "g", {"id": "circles", "fill": "none", "stroke": "#555555", "stroke-width": "1"}
    )
    for c in circles:
        ET.SubElement(
            rings,
            "circle",
            {"cx": _fmt(half), "cy": _fmt(half), "r": _fmt(scale * c.radius)},
        )

    dots = ET.SubElement(svg, "g", {"id": "points", "fill": "#c0392b", "stroke": "none"})
    for c in circles:
        for p in c.members:
            ET.SubElement(
                dots,
                "circle",
                {"cx": _fmt(sx(p.x)), "cy": _fmt(sy(p.y)), "r": str(_POINT_RADIUS)},
            )

    if labels:
        text = ET.SubElement(
            svg, "g", {"id": "labels", "fill": "#333333", "font-size": "10", "font-family": "sans-serif"}
        )
        for c in circles:
            el = ET.SubElement(
                text,
                "text",
                {"x": _fmt(sx(c.radius) + 3.0), "y": _fmt(sy(0.0) - 3.0)},
            )
            el.text = f"{c.radius:.4f}"

    return ET.tostring(svg, encoding="unicode") + "\n"
