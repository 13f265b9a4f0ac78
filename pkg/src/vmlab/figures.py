"""Worksheet figures rendered with matplotlib.

The exercise generator can write one figure per generated row so a printed
worksheet shows each instrument at its drawn position.  These are plain
raster/vector figures for humans; the byte-stable depiction used by the
CLI renderer lives in :mod:`vmlab.svgrender`.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from vmlab.instruments import (
    MicrometerReading,
    decompose,
    geometry_template,
    moving_transform,
    reading_text,
    revolution_transform,
)
from vmlab.model import InstrumentKind, InstrumentSpec, TickPosition, check_ticks

INK = "#1c2333"
ACCENT = "#b3261e"

_RC = {
    "figure.facecolor": "white",
    "savefig.facecolor": "white",
    "font.family": "sans-serif",
    "font.size": 9,
}


def render_figure(
    spec: InstrumentSpec,
    ticks: TickPosition,
    out_path: str | Path,
    show_reading: bool = False,
) -> None:
    """Draw the instrument at ``ticks`` and save to ``out_path``."""
    check_ticks(spec, ticks)
    with plt.rc_context(_RC):
        if spec.kind in (InstrumentKind.CALIPER, InstrumentKind.MICROMETER):
            fig = _linear_figure(spec, ticks)
        elif spec.kind is InstrumentKind.DIAL_INDICATOR:
            fig = _dial_figure(spec, ticks)
        else:
            fig = _protractor_figure(spec, ticks)
        if show_reading:
            fig.text(0.5, 0.02, reading_text(spec, ticks), ha="center", fontsize=10)
        fig.suptitle(spec.kind.display_name, fontsize=11)
        fig.savefig(out_path, dpi=150)
        plt.close(fig)


def _linear_figure(spec: InstrumentSpec, ticks: TickPosition) -> plt.Figure:
    geo = geometry_template(spec)
    fig, ax = plt.subplots(figsize=(11, 2.4))
    for mark in geo.fixed_marks:
        x = float(mark.axis_pos)
        length = 1.0 if mark.tier == "major" else 0.6
        ax.plot([x, x], [0, length], color=INK, lw=0.9)
        if mark.label is not None:
            ax.text(x, 1.25, mark.label, ha="center", va="bottom", fontsize=7)
    if spec.kind is InstrumentKind.MICROMETER:
        # Unrolled thimble strip to the right of the sleeve.
        reading = decompose(spec, ticks)
        assert isinstance(reading, MicrometerReading)
        axis_max = float(geo.fixed_marks[-1].axis_pos)
        x0 = axis_max * 1.08
        per = axis_max * 0.22 / len(geo.moving_marks)
        for j, mark in enumerate(geo.moving_marks):
            x = x0 + j * per
            length = 0.9 if mark.tier == "major" else 0.5
            color = ACCENT if j == reading.thimble_index else INK
            ax.plot([x, x], [-length, 0], color=color, lw=0.9)
            if mark.label is not None:
                ax.text(x, -1.15, mark.label, ha="center", va="top", fontsize=6)
        ax.plot([axis_max, axis_max], [-0.4, 0], color=INK, lw=0.5)
    else:
        slide = float(moving_transform(spec, ticks).amount)
        for j, mark in enumerate(geo.moving_marks):
            x = slide + float(mark.axis_pos)
            length = 1.0 if mark.tier == "major" else 0.6
            ax.plot([x, x], [-length, 0], color=INK, lw=0.9)
            # Every label would collide at this scale; every fifth reads fine.
            if mark.label is not None and j % 5 == 0:
                ax.text(x, -1.15, mark.label, ha="center", va="top", fontsize=7)
    ax.axhline(0, color=INK, lw=0.8)
    ax.set_ylim(-2.2, 2.2)
    ax.set_axis_off()
    fig.tight_layout()
    return fig


def _hand(ax: plt.Axes, cx: float, cy: float, angle_deg: float, radius: float, **kw) -> None:
    rad = math.radians(angle_deg)
    ax.plot([cx, cx + radius * math.sin(rad)], [cy, cy + radius * math.cos(rad)], **kw)


def _dial_figure(spec: InstrumentSpec, ticks: TickPosition) -> plt.Figure:
    geo = geometry_template(spec)
    fig, ax = plt.subplots(figsize=(4.6, 4.6))
    for mark in geo.fixed_marks:
        rad = math.radians(float(mark.axis_pos))
        inner = 0.86 if mark.tier == "major" else 0.92
        ax.plot(
            [inner * math.sin(rad), math.sin(rad)],
            [inner * math.cos(rad), math.cos(rad)],
            color=INK,
            lw=0.9,
        )
        if mark.label is not None:
            ax.text(
                0.76 * math.sin(rad), 0.76 * math.cos(rad), mark.label,
                ha="center", va="center", fontsize=8,
            )
    circle = plt.Circle((0, 0), 1.04, fill=False, color=INK, lw=1.0)
    ax.add_patch(circle)
    _hand(ax, 0, 0, float(moving_transform(spec, ticks).amount), 0.82, color=ACCENT, lw=2.0)
    sub_cy = -0.45
    assert spec.divisions_per_revolution is not None
    revolutions_total = spec.range_max_ticks // spec.divisions_per_revolution
    for r in range(revolutions_total):
        rad = math.radians(r * 360.0 / revolutions_total)
        ax.plot(
            [0.14 * math.sin(rad), 0.18 * math.sin(rad)],
            [sub_cy + 0.14 * math.cos(rad), sub_cy + 0.18 * math.cos(rad)],
            color=INK,
            lw=0.7,
        )
    _hand(
        ax, 0, sub_cy, float(revolution_transform(spec, ticks).amount), 0.12,
        color=ACCENT, lw=1.4,
    )
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return fig


def _protractor_figure(spec: InstrumentSpec, ticks: TickPosition) -> plt.Figure:
    geo = geometry_template(spec)
    fig, ax = plt.subplots(figsize=(7.5, 4.4))

    def point(angle_deg: float, radius: float) -> tuple[float, float]:
        rad = math.radians(angle_deg)
        return -radius * math.cos(rad), radius * math.sin(rad)

    for mark in geo.fixed_marks:
        angle = float(mark.axis_pos)
        inner = 0.9 if mark.tier == "major" else 0.95
        (x1, y1), (x2, y2) = point(angle, inner), point(angle, 1.0)
        ax.plot([x1, x2], [y1, y2], color=INK, lw=0.9)
        if mark.label is not None:
            lx, ly = point(angle, 1.07)
            ax.text(lx, ly, mark.label, ha="center", va="center", fontsize=7)
    measured = float(moving_transform(spec, ticks).amount)
    for mark in geo.moving_marks:
        angle = measured + float(mark.axis_pos)
        (x1, y1), (x2, y2) = point(angle, 0.8), point(angle, 0.87)
        ax.plot([x1, x2], [y1, y2], color=INK, lw=0.9)
    bx, by = point(measured, 0.78)
    ax.plot([0, bx], [0, by], color=ACCENT, lw=1.6)
    ax.axhline(0, color=INK, lw=0.7)
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-0.15, 1.2)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return fig
