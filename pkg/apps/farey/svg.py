"""
把多边形边界画成 SVG

半圆与竖直线都由 svgpathtools 生成路径，坐标在固定视口内等比缩放，y 轴朝下。
"""
from typing import List, Optional

from svgpathtools import Arc as SvgArc, Line, Path

from apps.psl2 import parse_fraction

from .geometry import RHO_IMAGE, Arc, PolygonGeometry

_STROKES = {"even-edge": "#1f77b4", "odd-edge": "#d62728", "f-edge": "#2ca02c"}


class _Viewport:
    def __init__(self, xmin: float, xmax: float, width: int):
        self.xmin = xmin
        self.scale = width / (xmax - xmin)
        self.top = (xmax - xmin) / 2 + 0.25
        self.width = width
        self.height = round(self.top * self.scale)

    def point(self, z: complex) -> complex:
        return complex((z.real - self.xmin) * self.scale, (self.top - z.imag) * self.scale)


def _endpoint(text: str, arc: Arc) -> Optional[complex]:
    """端点坐标；无穷远点返回 None"""
    if text == RHO_IMAGE:
        return arc.corner.point()
    x = parse_fraction(text)
    if x.is_infinite:
        return None
    return complex(float(x.as_fraction()), 0.0)


def _segment(arc: Arc, view: _Viewport):
    start = _endpoint(arc.from_, arc)
    end = _endpoint(arc.to, arc)
    if start is None or end is None:
        # 以无穷远点为端点的测地线是竖直线
        finite = end if start is None else start
        foot = complex(finite.real, view.top)
        return Line(view.point(finite), view.point(foot))

    if start.imag == 0 and end.imag == 0:
        center = (start.real + end.real) / 2
    else:
        # 圆心在实轴上且到两端点距离相等
        center = (abs(end) ** 2 - abs(start) ** 2) / (2 * (end.real - start.real))
    radius = abs(start - center) * view.scale
    return SvgArc(
        view.point(start),
        complex(radius, radius),
        0.0,
        False,
        start.real < end.real,
        view.point(end),
    )


def render_svg(geometry: PolygonGeometry, width: int = 800) -> str:
    """生成独立的 SVG 文档文本"""
    finite = [float(parse_fraction(v).as_fraction()) for v in geometry.vertices[1:-1]]
    view = _Viewport(min(finite) - 1.0, max(finite) + 1.0, width)

    body: List[str] = []
    axis = Line(view.point(complex(view.xmin, 0)), view.point(complex(view.xmin + width / view.scale, 0)))
    body.append(f'  <path d="{Path(axis).d()}" stroke="#999999" fill="none"/>')
    for arc in geometry.arcs:
        stroke = _STROKES.get(arc.kind, "#000000")
        path = Path(_segment(arc, view))
        body.append(
            f'  <path d="{path.d()}" stroke="{stroke}" stroke-width="2" fill="none">'
            f"<title>edge {arc.edge} {arc.kind} {arc.pairing}</title></path>"
        )
    for text, x in zip(geometry.vertices[1:-1], finite):
        p = view.point(complex(x, 0))
        body.append(
            f'  <text x="{p.real:.2f}" y="{p.imag + 16:.2f}" font-size="12" text-anchor="middle">{text}</text>'
        )

    return "\n".join(
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{view.width}" '
            f'height="{view.height + 24}" viewBox="0 0 {view.width} {view.height + 24}">',
            *body,
            "</svg>",
        ]
    )
