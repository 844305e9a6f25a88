"""Dependency-free multi-panel SVG report.

One panel per (metric, sequence) showing raw per-record values, the
sequence mean line, the fitted slope, and the shaded confidence band.
Markup is static (no scripts) and deterministic: element order and
number formatting depend only on the input data.
"""

from __future__ import annotations

from typing import Mapping, Sequence

PANEL_W = 320
PANEL_H = 220
MARGIN_LEFT = 56
MARGIN_TOP = 40
GAP_X = 24
GAP_Y = 40

FIT_COLOR = "#1f77b4"
MEAN_COLOR = "#d62728"
BAND_COLOR = "#cccccc"
POINT_COLOR = "#55555533"


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def _num(v: float) -> str:
    return f"{v:.2f}"


class _Scale:
    """Affine map from data coordinates to one panel's pixel box."""

    def __init__(self, x_range, y_range, ox, oy):
        self.x0, x1 = x_range
        self.y0, y1 = y_range
        self.ox, self.oy = ox, oy
        self.sx = PANEL_W / (x1 - self.x0) if x1 > self.x0 else 1.0
        self.sy = PANEL_H / (y1 - self.y0) if y1 > self.y0 else 1.0
        self.ytop = y1

    def px(self, x: float) -> float:
        return self.ox + (x - self.x0) * self.sx

    def py(self, y: float) -> float:
        return self.oy + (self.ytop - y) * self.sy


def _path(xs, ys, scale: _Scale) -> str:
    parts = []
    for i, (x, y) in enumerate(zip(xs, ys)):
        cmd = "M" if i == 0 else "L"
        parts.append(f"{cmd}{_num(scale.px(x))},{_num(scale.py(y))}")
    return " ".join(parts)


def _band_path(xs, lower, upper, scale: _Scale) -> str:
    fwd = [f"{'M' if i == 0 else 'L'}{_num(scale.px(x))},{_num(scale.py(u))}" for i, (x, u) in enumerate(zip(xs, upper))]
    back = [f"L{_num(scale.px(x))},{_num(scale.py(lo))}" for x, lo in zip(reversed(list(xs)), reversed(list(lower)))]
    return " ".join(fwd + back) + " Z"


def render_panel(panel: Mapping, ox: float, oy: float) -> str:
    """SVG fragment for one (metric, sequence) panel.

    ``panel`` needs keys x, fit, lower, upper (sequences), mean (float),
    title (str), and optionally points as (x, y) pairs.
    """
    xs = list(panel["x"])
    lower = list(panel["lower"])
    upper = list(panel["upper"])
    fit = list(panel["fit"])
    points = list(panel.get("points", []))
    ys = lower + upper + fit + [panel["mean"]] + [p[1] for p in points]
    y_lo, y_hi = min(ys), max(ys)
    pad = (y_hi - y_lo) * 0.05 or 1.0
    scale = _Scale((min(xs), max(xs)), (y_lo - pad, y_hi + pad), ox, oy)

    parts = [f'<g class="panel">']
    parts.append(
        f'<rect class="frame" x="{_num(ox)}" y="{_num(oy)}" width="{PANEL_W}" height="{PANEL_H}" '
        f'fill="white" stroke="#999" stroke-width="1"/>'
    )
    parts.append(
        f'<path class="band" d="{_band_path(xs, lower, upper, scale)}" '
        f'fill="{BAND_COLOR}" fill-opacity="0.6" stroke="none"/>'
    )
    for px_, py_ in points:
        parts.append(
            f'<circle class="pt" cx="{_num(scale.px(px_))}" cy="{_num(scale.py(py_))}" '
            f'r="1.5" fill="{POINT_COLOR}"/>'
        )
    mean_y = _num(scale.py(panel["mean"]))
    parts.append(
        f'<line class="mean" x1="{_num(ox)}" y1="{mean_y}" x2="{_num(ox + PANEL_W)}" y2="{mean_y}" '
        f'stroke="{MEAN_COLOR}" stroke-width="1.5"/>'
    )
    parts.append(
        f'<path class="fit" d="{_path(xs, fit, scale)}" fill="none" '
        f'stroke="{FIT_COLOR}" stroke-width="2"/>'
    )
    parts.append(
        f'<text class="title" x="{_num(ox + PANEL_W / 2)}" y="{_num(oy - 8)}" '
        f'text-anchor="middle" font-size="12" font-family="sans-serif">{_esc(panel["title"])}</text>'
    )
    # y-axis extremes as tick labels
    parts.append(
        f'<text class="tick" x="{_num(ox - 4)}" y="{_num(oy + 10)}" text-anchor="end" '
        f'font-size="9" font-family="sans-serif">{_num(y_hi + pad)}</text>'
    )
    parts.append(
        f'<text class="tick" x="{_num(ox - 4)}" y="{_num(oy + PANEL_H)}" text-anchor="end" '
        f'font-size="9" font-family="sans-serif">{_num(y_lo - pad)}</text>'
    )
    parts.append("</g>")
    return "\n".join(parts)


def render_report(panels: Sequence[Mapping], n_rows: int, n_cols: int) -> str:
    """Assemble panels row-major into one standalone SVG document."""
    width = MARGIN_LEFT + n_cols * (PANEL_W + GAP_X)
    height = MARGIN_TOP + n_rows * (PANEL_H + GAP_Y)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for idx, panel in enumerate(panels):
        row, col = divmod(idx, n_cols)
        ox = MARGIN_LEFT + col * (PANEL_W + GAP_X)
        oy = MARGIN_TOP + row * (PANEL_H + GAP_Y)
        parts.append(render_panel(panel, ox, oy))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
