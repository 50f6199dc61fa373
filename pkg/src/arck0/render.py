"""SVG rendering of marked circles and arc families.

Segment s occupies the circular sector (s/n, (s+1)/n); inside a sector the
offsets are squashed through a tanh so that large offsets pile up visually
against the accumulation points, which are drawn as small open circles at the
sector boundaries.  Output is plain SVG 1.1 text, byte-identical for
identical input.
"""

from __future__ import annotations

import math
from typing import Iterable

from .circle import CircleModel, MarkedPoint
from .arcs import Arc

SIZE = 480
CENTER = SIZE / 2
RADIUS = 200
SECTOR_PAD = 0.06


def point_fraction(model: CircleModel, p: MarkedPoint, window: int) -> float:
    """Position of a marked point along the circumference, in [0, 1)."""
    model.check_point(p)
    tau = max(window, 1) / 2.0
    squash = 0.5 * (1.0 + math.tanh(p[1] / tau))
    inner = SECTOR_PAD + (1.0 - 2.0 * SECTOR_PAD) * squash
    return (p[0] + inner) / model.num_segments


def point_xy(model: CircleModel, p: MarkedPoint, window: int) -> tuple[float, float]:
    theta = 2.0 * math.pi * point_fraction(model, p, window) + math.pi / 2
    return (CENTER + RADIUS * math.cos(theta), CENTER - RADIUS * math.sin(theta))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(model: CircleModel, arcs: Iterable[Arc], window: int) -> str:
    """Draw the circle, in-window tick marks, accumulation markers and arcs."""
    if window < 1:
        raise ValueError("window must be positive")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{RADIUS}" '
        'fill="none" stroke="black" stroke-width="1.5"/>',
    ]

    for p in model.points_in_window(window):
        theta = 2.0 * math.pi * point_fraction(model, p, window) + math.pi / 2
        cos_t, sin_t = math.cos(theta), math.sin(theta)
        x1 = CENTER + (RADIUS - 4) * cos_t
        y1 = CENTER - (RADIUS - 4) * sin_t
        x2 = CENTER + (RADIUS + 4) * cos_t
        y2 = CENTER - (RADIUS + 4) * sin_t
        lines.append(
            f'<line class="tick" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black" stroke-width="1"/>'
        )

    for b in range(model.num_segments):
        theta = 2.0 * math.pi * ((b + 1) / model.num_segments) + math.pi / 2
        x = CENTER + RADIUS * math.cos(theta)
        y = CENTER - RADIUS * math.sin(theta)
        lines.append(
            f'<circle class="accumulation" cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" '
            'fill="white" stroke="black" stroke-width="1.5"/>'
        )

    for arc in arcs:
        x1, y1 = point_xy(model, arc.a, window)
        x2, y2 = point_xy(model, arc.b, window)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        # pull the control point toward the centre so chords read as arcs
        cx = CENTER + (mx - CENTER) * 0.45
        cy = CENTER + (my - CENTER) * 0.45
        lines.append(
            f'<path class="arc" d="M {_fmt(x1)} {_fmt(y1)} '
            f'Q {_fmt(cx)} {_fmt(cy)} {_fmt(x2)} {_fmt(y2)}" '
            'fill="none" stroke="black" stroke-width="1.2"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
