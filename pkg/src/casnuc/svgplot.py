"""Minimal deterministic SVG line charts.

No timestamps, no randomness, fixed palette and float formatting: identical
input must yield byte-identical output.
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

from .errors import DomainError, NumericalError

Series = tuple[str, Sequence[float], Sequence[float]]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_MARGIN_LEFT = 72.0
_MARGIN_RIGHT = 24.0
_MARGIN_TOP = 34.0
_MARGIN_BOTTOM = 54.0


def _fmt(v: float) -> str:
    # fixed 2-decimal pixel coordinates keep the output byte-stable
    return f"{v:.2f}"


def _tick_positions(lo: float, hi: float, target: int = 5) -> list[float]:
    span = hi - lo
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    norm = raw / mag
    if norm <= 1.0:
        step = mag
    elif norm <= 2.0:
        step = 2.0 * mag
    elif norm <= 5.0:
        step = 5.0 * mag
    else:
        step = 10.0 * mag
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    v = first
    while v <= hi + 1e-9 * span:
        ticks.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return ticks


def render_line_chart(
    series: Sequence[Series],
    x_label: str,
    y_label: str,
    title: str | None = None,
    width: int = 640,
    height: int = 440,
) -> str:
    """Render labelled (xs, ys) series as an SVG document string.

    Every series needs at least two points and all-finite values; violations
    raise (NumericalError for non-finite data, DomainError otherwise).
    """
    if len(series) == 0:
        raise DomainError("at least one series is required")
    for label, xs, ys in series:
        if len(xs) != len(ys):
            raise DomainError(f"series {label!r}: x/y length mismatch")
        if len(xs) < 2:
            raise DomainError(f"series {label!r}: at least 2 points required")
        for v in list(xs) + list(ys):
            if not math.isfinite(v):
                raise NumericalError(f"series {label!r}: non-finite value {v}")

    xmin = min(min(xs) for _, xs, _ in series)
    xmax = max(max(xs) for _, xs, _ in series)
    ymin = min(min(ys) for _, _, ys in series)
    ymax = max(max(ys) for _, _, ys in series)
    if xmin == xmax:
        xmin, xmax = xmin - 1.0, xmax + 1.0
    if ymin == ymax:
        ymin, ymax = ymin - 1.0, ymax + 1.0

    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - xmin) / (xmax - xmin) * plot_w

    def py(y: float) -> float:
        return _MARGIN_TOP + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h

    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')

    x0, x1 = _fmt(_MARGIN_LEFT), _fmt(_MARGIN_LEFT + plot_w)
    y0, y1 = _fmt(_MARGIN_TOP), _fmt(_MARGIN_TOP + plot_h)

    for tx in _tick_positions(xmin, xmax):
        p = _fmt(px(tx))
        out.append(
            f'<line x1="{p}" y1="{y0}" x2="{p}" y2="{y1}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{p}" y1="{y1}" x2="{p}" y2="{_fmt(_MARGIN_TOP + plot_h + 5)}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{p}" y="{_fmt(_MARGIN_TOP + plot_h + 18)}" font-family="sans-serif" '
            f'font-size="11" text-anchor="middle" fill="#333333">{tx:g}</text>'
        )
    for ty in _tick_positions(ymin, ymax):
        p = _fmt(py(ty))
        out.append(
            f'<line x1="{x0}" y1="{p}" x2="{x1}" y2="{p}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{_fmt(_MARGIN_LEFT - 5)}" y1="{p}" x2="{x0}" y2="{p}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(_MARGIN_LEFT - 8)}" y="{_fmt(py(ty) + 4)}" '
            f'font-family="sans-serif" font-size="11" text-anchor="end" '
            f'fill="#333333">{ty:g}</text>'
        )

    out.append(
        f'<rect x="{x0}" y="{y0}" width="{_fmt(plot_w)}" height="{_fmt(plot_h)}" '
        f'fill="none" stroke="#333333" stroke-width="1"/>'
    )

    for i, (label, xs, ys) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )

    # legend, top-right corner of the plot area
    for i, (label, _, _) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        ly = _MARGIN_TOP + 14.0 + 16.0 * i
        lx = _MARGIN_LEFT + plot_w - 150.0
        out.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(ly - 4)}" x2="{_fmt(lx + 22)}" '
            f'y2="{_fmt(ly - 4)}" stroke="{color}" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{_fmt(lx + 27)}" y="{_fmt(ly)}" font-family="sans-serif" '
            f'font-size="11" fill="#333333">{escape(label)}</text>'
        )

    if title:
        out.append(
            f'<text x="{_fmt(width / 2)}" y="20" font-family="sans-serif" '
            f'font-size="13" text-anchor="middle" fill="#000000">{escape(title)}</text>'
        )
    out.append(
        f'<text x="{_fmt(_MARGIN_LEFT + plot_w / 2)}" y="{_fmt(height - 14)}" '
        f'font-family="sans-serif" font-size="12" text-anchor="middle" '
        f'fill="#000000">{escape(x_label)}</text>'
    )
    out.append(
        f'<text x="16" y="{_fmt(_MARGIN_TOP + plot_h / 2)}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle" fill="#000000" '
        f'transform="rotate(-90 16 {_fmt(_MARGIN_TOP + plot_h / 2)})">{escape(y_label)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
