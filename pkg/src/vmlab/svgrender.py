"""Deterministic SVG depictions of the instruments.

Byte-stable by construction: geometry comes from the exact templates, every
coordinate is formatted to six decimal places, elements are emitted in a
fixed order, and nothing time- or environment-dependent is written.  The
web UI draws its own interactive picture; this renderer serves the CLI and
printed worksheets.
"""

from __future__ import annotations

import html
import math

from vmlab.instruments import (
    MicrometerReading,
    best_aligned_mark,
    decompose,
    geometry_template,
    moving_transform,
    reading_text,
    revolution_transform,
)
from vmlab.model import (
    InstrumentKind,
    InstrumentSpec,
    TickPosition,
    check_ticks,
)

_STYLE = (
    "text{font-family:Helvetica,Arial,sans-serif;fill:#1c2333}"
    ".mark{stroke:#1c2333;stroke-width:1}"
    ".mark.major{stroke-width:1.6}"
    ".mark.coincide{stroke:#b3261e;stroke-width:2.4}"
    ".beam{fill:#efece4;stroke:#8a867c;stroke-width:1}"
    ".frame{fill:none;stroke:#8a867c;stroke-width:1}"
    ".hand{stroke:#b3261e;stroke-width:3;stroke-linecap:round}"
    ".hand2{stroke:#b3261e;stroke-width:2;stroke-linecap:round}"
    ".datum{stroke:#0b5d8a;stroke-width:1.4}"
)


def _f(x: float) -> str:
    return f"{float(x):.6f}"


def _line(x1: float, y1: float, x2: float, y2: float, cls: str) -> str:
    return (
        f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}"'
        f' x2="{_f(x2)}" y2="{_f(y2)}"/>'
    )


def _text(x: float, y: float, content: str, size: int, anchor: str = "middle") -> str:
    return (
        f'<text x="{_f(x)}" y="{_f(y)}" font-size="{size}"'
        f' text-anchor="{anchor}">{html.escape(content)}</text>'
    )


def _document(width: int, height: int, elements: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">'
    )
    style = f"<style>{_STYLE}</style>"
    return "\n".join([head, style, *elements, "</svg>"]) + "\n"


def render_svg(spec: InstrumentSpec, ticks: TickPosition, show_reading: bool = False) -> str:
    """Render the instrument at a position; optionally annotate the reading."""
    check_ticks(spec, ticks)
    if spec.kind is InstrumentKind.CALIPER:
        return _linear_vernier_svg(spec, ticks, show_reading)
    if spec.kind is InstrumentKind.MICROMETER:
        return _micrometer_svg(spec, ticks, show_reading)
    if spec.kind is InstrumentKind.DIAL_INDICATOR:
        return _dial_svg(spec, ticks, show_reading)
    return _protractor_svg(spec, ticks, show_reading)


def _linear_vernier_svg(spec: InstrumentSpec, ticks: TickPosition, show_reading: bool) -> str:
    geo = geometry_template(spec)
    width, height = 1200, 240
    margin = 30.0
    axis_max = float(geo.fixed_marks[-1].axis_pos)
    per_unit = (width - 2 * margin) / axis_max

    def x_of(pos: float) -> float:
        return margin + pos * per_unit

    elements = [
        f'<rect class="beam" x="{_f(margin - 10)}" y="56" width="{_f(width - 2 * margin + 20)}" height="44"/>'
    ]
    for mark in geo.fixed_marks:
        x = x_of(float(mark.axis_pos))
        length = 26 if mark.tier == "major" else 16
        elements.append(_line(x, 100, x, 100 - length, f"mark {mark.tier}"))
        if mark.label is not None:
            elements.append(_text(x, 68, mark.label, 11))

    slide = float(moving_transform(spec, ticks).amount)
    span = float(geo.moving_marks[-1].axis_pos)
    left = x_of(slide) - 8
    right = x_of(slide + span) + 8
    elements.append(
        f'<rect class="frame" x="{_f(left)}" y="104" width="{_f(right - left)}" height="46"/>'
    )
    coincide = best_aligned_mark(spec, ticks) if show_reading else None
    for j, mark in enumerate(geo.moving_marks):
        x = x_of(slide + float(mark.axis_pos))
        length = 26 if mark.tier == "major" else 16
        cls = f"mark {mark.tier}"
        if coincide is not None and j == coincide:
            cls += " coincide"
        elements.append(_line(x, 104, x, 104 + length, cls))
        if mark.label is not None:
            elements.append(_text(x, 144, mark.label, 10))
    elements.append(_line(x_of(slide), 100, x_of(slide), 104, "datum"))

    if show_reading:
        elements.append(_text(width / 2, 196, reading_text(spec, ticks), 15))
    return _document(width, height, elements)


def _micrometer_svg(spec: InstrumentSpec, ticks: TickPosition, show_reading: bool) -> str:
    geo = geometry_template(spec)
    width, height = 1200, 300
    sleeve_left, sleeve_right = 40.0, 700.0
    axis_max = float(geo.fixed_marks[-1].axis_pos)
    per_unit = (sleeve_right - sleeve_left) / axis_max
    datum_y = 130.0

    elements = [_line(sleeve_left, datum_y, sleeve_right + 40, datum_y, "mark major")]
    for mark in geo.fixed_marks:
        x = sleeve_left + float(mark.axis_pos) * per_unit
        if mark.axis_pos.denominator == 1:  # whole millimetres above the datum
            elements.append(_line(x, datum_y, x, datum_y - 26, f"mark {mark.tier}"))
        else:
            elements.append(_line(x, datum_y, x, datum_y + 22, f"mark {mark.tier}"))
        if mark.label is not None:
            elements.append(_text(x, datum_y - 34, mark.label, 11))

    # Thimble graduations, unrolled into a vertical strip.
    reading = decompose(spec, ticks)
    assert isinstance(reading, MicrometerReading)
    strip_x = 800.0
    strip_top, strip_bottom = 40.0, 260.0
    count = len(geo.moving_marks)
    step = (strip_bottom - strip_top) / count
    elements.append(
        f'<rect class="frame" x="{_f(strip_x - 14)}" y="{_f(strip_top - 10)}"'
        f' width="76" height="{_f(strip_bottom - strip_top + 20)}"/>'
    )
    current = reading.thimble_index
    for j, mark in enumerate(geo.moving_marks):
        y = strip_top + j * step
        length = 40 if mark.tier == "major" else 26
        cls = f"mark {mark.tier}"
        if show_reading and j == current:
            cls += " coincide"
        elements.append(_line(strip_x, y, strip_x + length, y, cls))
        if mark.label is not None:
            elements.append(_text(strip_x + 58, y + 4, mark.label, 10, anchor="end"))
    pointer_y = strip_top + current * step
    elements.append(_line(sleeve_right + 40, datum_y, strip_x - 14, pointer_y, "datum"))

    if show_reading:
        elements.append(_text(width / 2, 290, reading_text(spec, ticks), 15))
    return _document(width, height, elements)


def _dial_point(cx: float, cy: float, angle_deg: float, radius: float) -> tuple[float, float]:
    """Clockwise from twelve o'clock."""
    rad = math.radians(angle_deg)
    return cx + radius * math.sin(rad), cy - radius * math.cos(rad)


def _dial_svg(spec: InstrumentSpec, ticks: TickPosition, show_reading: bool) -> str:
    geo = geometry_template(spec)
    width, height = 480, 480
    cx, cy, radius = 240.0, 230.0, 195.0

    elements = [f'<circle class="frame" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(radius + 8)}"/>']
    for mark in geo.fixed_marks:
        angle = float(mark.axis_pos)
        length = 22 if mark.tier == "major" else 13
        x1, y1 = _dial_point(cx, cy, angle, radius)
        x2, y2 = _dial_point(cx, cy, angle, radius - length)
        elements.append(_line(x1, y1, x2, y2, f"mark {mark.tier}"))
        if mark.label is not None:
            lx, ly = _dial_point(cx, cy, angle, radius - 38)
            elements.append(_text(lx, ly + 4, mark.label, 13))

    # Revolution counter: a small sub-dial below the centre.
    assert spec.divisions_per_revolution is not None
    revolutions_total = spec.range_max_ticks // spec.divisions_per_revolution
    sub_cx, sub_cy, sub_r = cx, cy + 95.0, 40.0
    elements.append(f'<circle class="frame" cx="{_f(sub_cx)}" cy="{_f(sub_cy)}" r="{_f(sub_r)}"/>')
    for r in range(revolutions_total):
        angle = r * 360.0 / revolutions_total
        x1, y1 = _dial_point(sub_cx, sub_cy, angle, sub_r)
        x2, y2 = _dial_point(sub_cx, sub_cy, angle, sub_r - 8)
        elements.append(_line(x1, y1, x2, y2, "mark minor"))
        lx, ly = _dial_point(sub_cx, sub_cy, angle, sub_r - 16)
        elements.append(_text(lx, ly + 3, str(r), 8))

    rev_angle = float(revolution_transform(spec, ticks).amount)
    elements.append(
        f'<g transform="rotate({_f(rev_angle)} {_f(sub_cx)} {_f(sub_cy)})">'
        + _line(sub_cx, sub_cy, sub_cx, sub_cy - (sub_r - 12), "hand2")
        + "</g>"
    )

    hand_angle = float(moving_transform(spec, ticks).amount)
    elements.append(
        f'<g transform="rotate({_f(hand_angle)} {_f(cx)} {_f(cy)})">'
        + _line(cx, cy, cx, cy - (radius - 30), "hand")
        + "</g>"
    )
    elements.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="6" fill="#1c2333"/>')

    if show_reading:
        elements.append(_text(width / 2, 468, reading_text(spec, ticks), 15))
    return _document(width, height, elements)


def _protractor_point(
    cx: float, cy: float, angle_deg: float, radius: float
) -> tuple[float, float]:
    """0 degrees at the left horizon, sweeping clockwise over the top."""
    rad = math.radians(angle_deg)
    return cx - radius * math.cos(rad), cy - radius * math.sin(rad)


def _protractor_svg(spec: InstrumentSpec, ticks: TickPosition, show_reading: bool) -> str:
    geo = geometry_template(spec)
    width, height = 760, 440
    cx, cy = 380.0, 390.0
    r_main, r_vernier = 310.0, 258.0

    elements = [
        _line(cx - r_main - 20, cy, cx + r_main + 20, cy, "mark minor"),
    ]
    for mark in geo.fixed_marks:
        angle = float(mark.axis_pos)
        length = 22 if mark.tier == "major" else 12
        x1, y1 = _protractor_point(cx, cy, angle, r_main)
        x2, y2 = _protractor_point(cx, cy, angle, r_main - length)
        elements.append(_line(x1, y1, x2, y2, f"mark {mark.tier}"))
        if mark.label is not None:
            lx, ly = _protractor_point(cx, cy, angle, r_main + 16)
            elements.append(_text(lx, ly + 4, mark.label, 11))

    measured = float(moving_transform(spec, ticks).amount)
    coincide = best_aligned_mark(spec, ticks) if show_reading else None
    for j, mark in enumerate(geo.moving_marks):
        angle = measured + float(mark.axis_pos)
        x1, y1 = _protractor_point(cx, cy, angle, r_vernier)
        x2, y2 = _protractor_point(cx, cy, angle, r_vernier + 20)
        cls = f"mark {mark.tier}"
        if coincide is not None and j == coincide:
            cls += " coincide"
        elements.append(_line(x1, y1, x2, y2, cls))
        if mark.label is not None:
            lx, ly = _protractor_point(cx, cy, angle, r_vernier - 14)
            elements.append(_text(lx, ly + 4, mark.label, 10))

    # The blade: a line through the centre at the measured angle.
    bx, by = _protractor_point(cx, cy, measured, r_vernier - 24)
    elements.append(_line(cx, cy, bx, by, "datum"))
    elements.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="5" fill="#1c2333"/>')

    if show_reading:
        elements.append(_text(width / 2, 36, reading_text(spec, ticks), 15))
    return _document(width, height, elements)
