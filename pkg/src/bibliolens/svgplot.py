"""Minimal static SVG line charts plus their (x, y) CSV series.

No plotting dependency: charts are a polyline with axes, ticks and labels,
written with fixed float formatting so output is byte-stable.
"""

from __future__ import annotations

import csv
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 420
MARGIN_LEFT, MARGIN_RIGHT = 70, 20
MARGIN_TOP, MARGIN_BOTTOM = 40, 50


def _scale(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x0 == x1:
        x0, x1 = x0 - 1, x1 + 1
    if y0 == y1:
        y0, y1 = y0 - 1, y1 + 1
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def to_px(x, y):
        px = MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w
        py = HEIGHT - MARGIN_BOTTOM - (y - y0) / (y1 - y0) * plot_h
        return px, py

    return to_px, (x0, x1, y0, y1)


def _ticks(lo, hi, n=5):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def write_line_chart(path, points, title: str, xlabel: str, ylabel: str) -> None:
    """Write a single-series line chart as a standalone SVG file."""
    if not points:
        raise ValueError("no points to plot")
    points = sorted(points)
    to_px, (x0, x1, y0, y1) = _scale(points)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{escape(title)}</text>',
    ]
    # axes
    ax_y = HEIGHT - MARGIN_BOTTOM
    parts.append(f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
                 f'y2="{ax_y}" stroke="black"/>')
    parts.append(f'<line x1="{MARGIN_LEFT}" y1="{ax_y}" x2="{WIDTH - MARGIN_RIGHT}" '
                 f'y2="{ax_y}" stroke="black"/>')
    for tx in _ticks(x0, x1):
        px, _ = to_px(tx, y0)
        parts.append(f'<line x1="{px:.1f}" y1="{ax_y}" x2="{px:.1f}" y2="{ax_y + 5}" stroke="black"/>')
        parts.append(f'<text x="{px:.1f}" y="{ax_y + 18}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{tx:.6g}</text>')
    for ty in _ticks(y0, y1):
        _, py = to_px(x0, ty)
        parts.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{py:.1f}" x2="{MARGIN_LEFT}" '
                     f'y2="{py:.1f}" stroke="black"/>')
        parts.append(f'<text x="{MARGIN_LEFT - 8}" y="{py + 4:.1f}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="11">{ty:.6g}</text>')
    parts.append(f'<text x="{WIDTH / 2:.1f}" y="{HEIGHT - 12}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="12">{escape(xlabel)}</text>')
    parts.append(f'<text x="16" y="{HEIGHT / 2:.1f}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="12" '
                 f'transform="rotate(-90 16 {HEIGHT / 2:.1f})">{escape(ylabel)}</text>')
    coords = " ".join(f"{to_px(x, y)[0]:.2f},{to_px(x, y)[1]:.2f}" for x, y in points)
    parts.append(f'<polyline points="{coords}" fill="none" stroke="#1f5fa8" stroke-width="1.5"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")


def write_series_csv(path, points, xlabel: str, ylabel: str) -> None:
    """Write the raw (x, y) series next to the chart."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([xlabel, ylabel])
        for x, y in sorted(points):
            writer.writerow([f"{x:.10g}", f"{y:.10g}"])


def write_plot(svg_path, points, title: str, xlabel: str, ylabel: str) -> None:
    """Emit both the SVG chart and its sibling .csv data series."""
    svg_path = str(svg_path)
    write_line_chart(svg_path, points, title, xlabel, ylabel)
    base = svg_path[:-4] if svg_path.lower().endswith(".svg") else svg_path
    write_series_csv(base + ".csv", points, xlabel, ylabel)
