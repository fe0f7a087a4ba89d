"""SVG drawings of 2-D sections."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from . import exactlin as el
from .polytope import SectionPolygon

SCALE = 100
MARGIN = Fraction(1, 10)


def _num(q: Fraction) -> str:
    return f"{float(q):.3f}"


def section_svg(section: SectionPolygon, title: str = "") -> str:
    """Polygon of the section, 100 units per 1.0, with a 10% margin on each
    side; every vertex is labeled with its exact coordinates."""
    xs = [v[0] for v in section.verts2d]
    ys = [v[1] for v in section.verts2d]
    span_x = (max(xs) - min(xs)) * SCALE
    span_y = (max(ys) - min(ys)) * SCALE
    pad_x, pad_y = span_x * MARGIN, span_y * MARGIN
    width, height = span_x + 2 * pad_x, span_y + 2 * pad_y

    def place(v):
        # SVG y grows downwards
        return (v[0] - min(xs)) * SCALE + pad_x, (max(ys) - v[1]) * SCALE + pad_y

    pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in map(place, section.verts2d))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
    ]
    if title:
        lines.append(f"  <title>{title}</title>")
    lines.append(f'  <polygon points="{pts}" fill="#dde8f5" stroke="#1f3b73" stroke-width="1"/>')
    ox, oy = place((Fraction(0), Fraction(0)))
    lines.append(f'  <circle cx="{_num(ox)}" cy="{_num(oy)}" r="1.5" fill="#1f3b73"/>')
    for v in section.verts2d:
        x, y = place(v)
        label = "(" + ", ".join(el.format_vector(v)) + ")"
        lines.append(f'  <circle cx="{_num(x)}" cy="{_num(y)}" r="2" fill="#b22222"/>')
        lines.append(f'  <text x="{_num(x)}" y="{_num(y)}" font-size="6" font-family="monospace">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_section_svg(section: SectionPolygon, path: str | Path, title: str = "") -> None:
    Path(path).write_text(section_svg(section, title), encoding="utf-8")
