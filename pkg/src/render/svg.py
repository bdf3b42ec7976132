"""
SVG 插图

画出：正 n 边形、⌊(n-1)/2⌋ 个同心圆、过 f' 根的 n-1 条竖线，以及（可选）f 的图像。
元素带固定的 id：polygon, circle-d<k>, line-l<k>, curve-f，方便按 id 统计数量
"""

from pathlib import Path
from typing import List, Sequence, Tuple
from xml.sax.saxutils import quoteattr

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.polynomial import critical_points
from src.geometry.models import RegularNgon
from src.geometry.ngon import ngon_polynomial, projections, vertices_xy
from src.verify.theorems import tangent_circle_radii

# 外接圆直径占较短边的比例
CIRCUMCIRCLE_FRACTION = 0.4
CURVE_SAMPLES = 400


def _fmt(value: float) -> str:
    return f"{value:.3f}"


class SVGElement:
    """带 id 和样式的基础元素"""

    tag = ""

    def __init__(self, element_id: str, stroke: str = "black", fill: str = "none",
                 stroke_width: float = 1.0):
        self.element_id = element_id
        self.stroke = stroke
        self.fill = fill
        self.stroke_width = stroke_width

    def geometry(self) -> str:
        return ""

    def __str__(self):
        return (f'<{self.tag} id={quoteattr(self.element_id)} {self.geometry()} '
                f'stroke="{self.stroke}" fill="{self.fill}" '
                f'stroke-width="{_fmt(self.stroke_width)}" />')


class SVGPolygon(SVGElement):
    tag = "polygon"

    def __init__(self, element_id: str, points: Sequence[Tuple[float, float]], **style):
        super().__init__(element_id, **style)
        self.points = list(points)

    def geometry(self) -> str:
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in self.points)
        return f'points="{pts}"'


class SVGCircle(SVGElement):
    tag = "circle"

    def __init__(self, element_id: str, cx: float, cy: float, radius: float, **style):
        super().__init__(element_id, **style)
        self.cx = cx
        self.cy = cy
        self.radius = radius

    def geometry(self) -> str:
        return f'cx="{_fmt(self.cx)}" cy="{_fmt(self.cy)}" r="{_fmt(self.radius)}"'


class SVGLine(SVGElement):
    tag = "line"

    def __init__(self, element_id: str, x1: float, y1: float, x2: float, y2: float, **style):
        super().__init__(element_id, **style)
        self.x1, self.y1, self.x2, self.y2 = x1, y1, x2, y2

    def geometry(self) -> str:
        return (f'x1="{_fmt(self.x1)}" y1="{_fmt(self.y1)}" '
                f'x2="{_fmt(self.x2)}" y2="{_fmt(self.y2)}"')


class SVGPolyline(SVGPolygon):
    tag = "polyline"


class SVGGraphic:
    """SVG 1.1 画布"""

    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.shapes: List[SVGElement] = []

    def add(self, shape: SVGElement) -> None:
        self.shapes.append(shape)

    def __str__(self):
        body = "\n  ".join(str(shape) for shape in self.shapes)
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f'  <rect id="background" x="0" y="0" width="{self.width}" '
            f'height="{self.height}" fill="white" />\n'
            f"  {body}\n"
            "</svg>\n"
        )


class FigureSpec(BaseModel):
    """插图参数（单位外接圆、中心在原点）"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    n: int = Field(ge=3)
    theta: float = 0.0
    show_polynomial_curve: bool = True
    show_circles: bool = True
    show_lines: bool = True
    width_px: int = Field(default=600, ge=100)
    height_px: int = Field(default=600, ge=100)


def build_figure(spec: FigureSpec) -> SVGGraphic:
    """
    构造插图

    布局:
    - 外接圆直径 = 较短边的 40%，水平居中；显示曲线时中心在上 1/3 处
    - 曲线与多边形共用 x 方向的比例，纵向缩放到下 1/3
    - 竖线贯穿整个画布，所以 f 的极值点正好落在竖线上
    """
    g = RegularNgon(n=spec.n, theta=spec.theta)
    width, height = spec.width_px, spec.height_px
    scale = CIRCUMCIRCLE_FRACTION * min(width, height) / 2
    cx = width / 2
    cy = height / 3 if spec.show_polynomial_curve else height / 2

    def to_px(x: float, y: float) -> Tuple[float, float]:
        return cx + scale * x, cy - scale * y

    graphic = SVGGraphic(width, height)
    graphic.add(SVGLine("axis-x", 0, cy, width, cy, stroke="#999999", stroke_width=0.5))
    graphic.add(SVGCircle("circumcircle", cx, cy, scale, stroke="#bbbbbb", stroke_width=0.5))
    graphic.add(SVGPolygon("polygon", [to_px(x, y) for x, y in vertices_xy(g)],
                           stroke="#1f4e79", stroke_width=1.5))

    if spec.show_circles:
        for d, r in enumerate(tangent_circle_radii(g).radii, start=1):
            graphic.add(SVGCircle(f"circle-d{d}", cx, cy, scale * r, stroke="#c0504d"))

    crit = critical_points(projections(g))
    if spec.show_lines:
        for k, c in enumerate(crit, start=1):
            x, _ = to_px(c, 0.0)
            graphic.add(SVGLine(f"line-l{k}", x, 0, x, height, stroke="#4f8a10",
                                stroke_width=0.8))

    if spec.show_polynomial_curve:
        f = ngon_polynomial(g)
        xs = np.linspace(-1.0, 1.0, CURVE_SAMPLES)
        ys = np.polynomial.polynomial.polyval(xs, list(f.coefficients))
        peak = float(np.max(np.abs(ys))) or 1.0
        band = height / 6
        base = 5 * height / 6
        points = [(cx + scale * x, base - band * y / peak) for x, y in zip(xs, ys)]
        graphic.add(SVGPolyline("curve-f", points, stroke="#7030a0", stroke_width=1.2))

    logger.debug(f"figure n={spec.n}: {len(graphic.shapes)} elements")
    return graphic


def write_figure(spec: FigureSpec, output_path: str) -> None:
    """把插图写到 SVG 文件"""
    Path(output_path).write_text(str(build_figure(spec)), encoding="utf-8")
