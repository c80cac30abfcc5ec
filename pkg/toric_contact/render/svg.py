"""모멘트 콘과 plumbing 부채꼴의 정적인 SVG 그림.

좌표는 소수점 4 자리로 고정하고 원소 순서를 일정하게 유지하여, 같은 입력에는 항상
바이트 단위로 같은 문서를 만듭니다.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from toric_contact.config import current_render_options
from toric_contact.domains import Direction, MomentCone, Plumbing, RenderOptions
from toric_contact.enums import AngleCategory
from toric_contact.geometry.cone import delta
from toric_contact.geometry.exact_angle import as_radians, category
from toric_contact.plumbing.chain import fan
from toric_contact.utils.common import get_logger

SVG_NS = "http://www.w3.org/2000/svg"
ET.register_namespace("", SVG_NS)

logger = get_logger()


def _q(tag: str) -> str:
    return f"{{{SVG_NS}}}{tag}"


def _fmt(value: float) -> str:
    text = f"{value:.4f}"
    return "0.0000" if text == "-0.0000" else text


def _point(o: RenderOptions, theta: float, radius: float) -> tuple[float, float]:
    # SVG 의 y 축은 아래를 향합니다.
    center = o.canvas_size / 2
    return center + radius * math.cos(theta), center - radius * math.sin(theta)


def _arg(u: Direction) -> float:
    return math.atan2(u.y, u.x) % (2 * math.pi)


def _document(o: RenderOptions, title: str) -> ET.Element:
    size = str(o.canvas_size)
    root = ET.Element(
        _q("svg"),
        {"version": "1.1", "width": size, "height": size, "viewBox": f"0 0 {size} {size}"},
    )
    ET.SubElement(root, _q("title")).text = title
    ET.SubElement(
        root,
        _q("rect"),
        {"class": "background", "x": "0", "y": "0", "width": size, "height": size, "fill": "white"},
    )
    return root


def _ray(parent: ET.Element, o: RenderOptions, u: Direction, label: str) -> None:
    center = _fmt(o.canvas_size / 2)
    x, y = _point(o, _arg(u), o.ray_length)
    ET.SubElement(
        parent,
        _q("line"),
        {
            "class": "ray",
            "x1": center,
            "y1": center,
            "x2": _fmt(x),
            "y2": _fmt(y),
            "stroke": "black",
            "stroke-width": "2",
        },
    )
    if o.show_labels:
        lx, ly = _point(o, _arg(u), o.ray_length + 14)
        text = ET.SubElement(
            parent,
            _q("text"),
            {"class": "label", "x": _fmt(lx), "y": _fmt(ly), "font-size": "12", "text-anchor": "middle"},
        )
        text.text = f"{label} ({u.x}, {u.y})"


def _arc_path(o: RenderOptions, start: float, sweep: float, radius: float, closed: bool) -> str:
    """start 에서 반시계 방향으로 sweep (0 < sweep < 2pi) 만큼 도는 원호 경로."""
    sx, sy = _point(o, start, radius)
    ex, ey = _point(o, start + sweep, radius)
    large = 1 if sweep > math.pi else 0
    arc = f"A {_fmt(radius)} {_fmt(radius)} 0 {large} 0 {_fmt(ex)} {_fmt(ey)}"
    if closed:
        center = _fmt(o.canvas_size / 2)
        return f"M {center} {center} L {_fmt(sx)} {_fmt(sy)} {arc} Z"
    return f"M {_fmt(sx)} {_fmt(sy)} {arc}"


def render_cone_svg(c: MomentCone, o: RenderOptions | None = None) -> str:
    """콘을 두 광선, r1 에서 r2 로 가는 원호, 회전 수 표기로 그립니다.

    전체 각도가 2pi 미만일 때만 부채꼴을 칠합니다. 옵션을 주지 않으면 현재 컨텍스트의
    렌더링 옵션을 씁니다.

    Raises:
        DegenerateCone: 각도가 0 인 콘
    """
    o = o or current_render_options()
    total = delta(c)
    fractional = as_radians(total) - 2 * math.pi * total.winding
    start = _arg(c.r1)

    root = _document(o, f"moment cone ({c.r1.x}, {c.r1.y}) -> ({c.r2.x}, {c.r2.y}), winding {c.winding}")
    if c.winding == 0:
        ET.SubElement(
            root,
            _q("path"),
            {
                "class": "sector",
                "d": _arc_path(o, start, fractional, o.ray_length, closed=True),
                "fill": "#cfe3f5",
                "stroke": "none",
            },
        )

    radius = o.ray_length * 0.35
    center = _fmt(o.canvas_size / 2)
    if c.winding >= 1:
        ET.SubElement(
            root,
            _q("circle"),
            {"class": "turns", "cx": center, "cy": center, "r": _fmt(radius), "fill": "none", "stroke": "#555"},
        )
    if category(c.r1, c.r2) is not AngleCategory.ZERO:
        ET.SubElement(
            root,
            _q("path"),
            {
                "class": "arc",
                "d": _arc_path(o, start, fractional, radius, closed=False),
                "fill": "none",
                "stroke": "#555",
            },
        )
    if c.winding >= 1:
        lx, ly = _point(o, start + fractional / 2, radius + 12)
        turns = ET.SubElement(
            root,
            _q("text"),
            {"class": "winding", "x": _fmt(lx), "y": _fmt(ly), "font-size": "12", "text-anchor": "middle"},
        )
        turns.text = f"+{c.winding} turn" if c.winding == 1 else f"+{c.winding} turns"

    _ray(root, o, c.r1, "r1")
    _ray(root, o, c.r2, "r2")
    logger.debug(f"rendered cone {c}")
    return ET.tostring(root, encoding="unicode")


def render_plumbing_svg(p: Plumbing, o: RenderOptions | None = None) -> str:
    """plumbing 의 모멘트 상을 변환된 L-shape 광선 부채꼴로 그립니다.

    이웃한 조각은 경계 광선을 공유하므로 광선은 n 개입니다. 꼭짓점 위치는 그리지 않습니다.
    """
    o = o or current_render_options()
    f = fan(p)
    root = _document(o, f"linear plumbing {list(p.chain)}")

    radius = o.ray_length * 0.35
    for j, (angle, start_ray) in enumerate(zip(f.angles, f.rays), start=1):
        ET.SubElement(
            root,
            _q("path"),
            {
                "class": "piece",
                "data-piece": str(j),
                "d": _arc_path(o, _arg(start_ray), as_radians(angle), radius + 6 * (j % 2), closed=False),
                "fill": "none",
                "stroke": "#555",
            },
        )
    for j, ray in enumerate(f.rays, start=1):
        _ray(root, o, ray, f"R{j}")
    logger.debug(f"rendered plumbing fan of {list(p.chain)} with {len(f.rays)} rays")
    return ET.tostring(root, encoding="unicode")
