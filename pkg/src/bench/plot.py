"""SVG line charts from bench records."""
import logging
import math
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import svgwrite

from numtheory.errors import InvalidArgument

from .types import CSV_FIELDS, BenchRecord

logger = logging.getLogger(__name__)

SVG_WIDTH = 820
SVG_HEIGHT = 500
MARGIN_LEFT = 90
MARGIN_RIGHT = 170
MARGIN_TOP = 50
MARGIN_BOTTOM = 70
Y_TICKS = 5

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")

NUMERIC_FIELDS = ("bits", "multiplier", "trial", "elapsed_ms", "candidates_tested", "smooth_found", "rounds")


def _aggregate(y_axis: str) -> Tuple[str, Callable[[BenchRecord], float]]:
    """Label and per-record value for aggregates like ``mean_elapsed`` or ``success_rate``."""
    if y_axis == "success_rate":
        return "success rate", lambda r: 1.0 if r.success else 0.0
    if y_axis.startswith("mean_"):
        name = y_axis[len("mean_"):]
        if name == "elapsed":
            name = "elapsed_ms"
        if name in NUMERIC_FIELDS:
            return f"mean {name}", lambda r: float(r.value(name))
    raise InvalidArgument(f"unknown aggregate {y_axis!r}")


def series_means(records: Sequence[BenchRecord], x_axis: str, y_axis: str,
                 series: str) -> Dict[str, List[Tuple[float, float]]]:
    """Mean of the aggregate per x value, grouped by the series field, x ascending."""
    if x_axis not in NUMERIC_FIELDS:
        raise InvalidArgument(f"x axis must be a numeric field, got {x_axis!r}")
    if series not in CSV_FIELDS:
        raise InvalidArgument(f"unknown series field {series!r}")
    _, extract = _aggregate(y_axis)

    buckets: Dict[str, Dict[float, List[float]]] = defaultdict(lambda: defaultdict(list))
    for record in records:
        key = record.to_row()[series]
        buckets[key][float(record.value(x_axis))].append(extract(record))
    return {
        key: sorted((x, sum(ys) / len(ys)) for x, ys in by_x.items())
        for key, by_x in sorted(buckets.items())
    }


def _format_tick(value: float) -> str:
    if value == 0:
        return "0"
    if abs(value) >= 1000 or abs(value) < 0.01:
        return f"{value:.2e}"
    return f"{value:.4g}"


def emit_svg_plot(records: Sequence[BenchRecord], x_axis: str = "bits", y_axis: str = "mean_elapsed",
                  series: str = "algorithm", logy: bool = False,
                  title: Optional[str] = None) -> bytes:
    """Standalone SVG line chart of the aggregate per x, one polyline per series value."""
    if not records:
        raise InvalidArgument("cannot plot an empty record set")
    label, _ = _aggregate(y_axis)
    data = series_means(records, x_axis, y_axis, series)

    xs = sorted({x for points in data.values() for x, _ in points})
    ys = [y for points in data.values() for _, y in points]
    if logy:
        positive = [y for y in ys if y > 0]
        if not positive:
            raise InvalidArgument("log-scale plot needs at least one positive value")
        floor = min(positive)
        ys = [max(y, floor) for y in ys]
        y_lo, y_hi = math.log10(min(ys)), math.log10(max(ys))
    else:
        y_lo, y_hi = min(0.0, min(ys)), max(ys)
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    x_lo, x_hi = xs[0], xs[-1]

    plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        if x_hi == x_lo:
            return MARGIN_LEFT + plot_w / 2
        return MARGIN_LEFT + plot_w * (x - x_lo) / (x_hi - x_lo)

    def py(y: float) -> float:
        if logy:
            y = math.log10(max(y, 10 ** y_lo))
        return MARGIN_TOP + plot_h * (1 - (y - y_lo) / (y_hi - y_lo))

    dwg = svgwrite.Drawing(size=(SVG_WIDTH, SVG_HEIGHT), debug=False)
    dwg.add(dwg.rect((0, 0), (SVG_WIDTH, SVG_HEIGHT), fill="white"))
    if title:
        dwg.add(dwg.text(title, insert=(SVG_WIDTH / 2, MARGIN_TOP / 2), font_size=16,
                         text_anchor="middle", font_family="sans-serif"))

    bottom = MARGIN_TOP + plot_h
    dwg.add(dwg.line(start=(MARGIN_LEFT, bottom), end=(MARGIN_LEFT + plot_w, bottom), stroke="black"))
    dwg.add(dwg.line(start=(MARGIN_LEFT, MARGIN_TOP), end=(MARGIN_LEFT, bottom), stroke="black"))

    for x in xs:
        dwg.add(dwg.line(start=(px(x), bottom), end=(px(x), bottom + 5), stroke="black"))
        dwg.add(dwg.text(_format_tick(x), insert=(px(x), bottom + 20), font_size=11,
                         text_anchor="middle", font_family="sans-serif"))
    for i in range(Y_TICKS + 1):
        level = y_lo + (y_hi - y_lo) * i / Y_TICKS
        y_pix = MARGIN_TOP + plot_h * (1 - i / Y_TICKS)
        shown = 10 ** level if logy else level
        dwg.add(dwg.line(start=(MARGIN_LEFT - 5, y_pix), end=(MARGIN_LEFT, y_pix), stroke="black"))
        dwg.add(dwg.line(start=(MARGIN_LEFT, y_pix), end=(MARGIN_LEFT + plot_w, y_pix),
                         stroke="#dddddd", stroke_width=0.5))
        dwg.add(dwg.text(_format_tick(shown), insert=(MARGIN_LEFT - 8, y_pix + 4), font_size=11,
                         text_anchor="end", font_family="sans-serif"))

    dwg.add(dwg.text(x_axis, insert=(MARGIN_LEFT + plot_w / 2, SVG_HEIGHT - 20), font_size=13,
                     text_anchor="middle", font_family="sans-serif"))
    y_title = f"{label} (log)" if logy else label
    dwg.add(dwg.text(y_title, insert=(20, MARGIN_TOP + plot_h / 2), font_size=13,
                     text_anchor="middle", font_family="sans-serif",
                     transform=f"rotate(-90 20 {MARGIN_TOP + plot_h / 2})"))

    legend_x = MARGIN_LEFT + plot_w + 20
    for index, (name, points) in enumerate(data.items()):
        color = COLORS[index % len(COLORS)]
        coords = [(round(px(x), 2), round(py(y), 2)) for x, y in points]
        dwg.add(dwg.polyline(coords, stroke=color, fill="none", stroke_width=2, class_="series"))
        for cx, cy in coords:
            dwg.add(dwg.circle(center=(cx, cy), r=3, fill=color))
        legend_y = MARGIN_TOP + 10 + index * 20
        dwg.add(dwg.line(start=(legend_x, legend_y), end=(legend_x + 20, legend_y), stroke=color, stroke_width=2))
        dwg.add(dwg.text(name, insert=(legend_x + 26, legend_y + 4), font_size=12, font_family="sans-serif"))

    logger.debug(f"plotted {len(data)} series over {len(xs)} x values")
    return dwg.tostring().encode("utf-8")
