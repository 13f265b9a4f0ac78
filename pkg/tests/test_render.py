"""Vector output: well-formed, deterministic, annotated only on request."""

from __future__ import annotations

import xml.etree.ElementTree as ET

from vmlab.instruments import reading_text
from vmlab.model import ALL_KINDS, InstrumentKind, default_spec
from vmlab.svgrender import render_svg


def test_every_kind_renders_well_formed_svg():
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        for ticks in (0, 1, spec.range_max_ticks // 3, spec.range_max_ticks):
            for show in (False, True):
                root = ET.fromstring(render_svg(spec, ticks, show_reading=show))
                assert root.tag.endswith("svg")
                assert root.get("viewBox") is not None


def test_output_is_identical_across_calls():
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        a = render_svg(spec, 77, show_reading=True)
        b = render_svg(spec, 77, show_reading=True)
        assert a == b


def test_reading_text_appears_only_when_requested():
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        text = reading_text(spec, 35)
        assert text not in render_svg(spec, 35)
        assert text in render_svg(spec, 35, show_reading=True)
    dial = default_spec(InstrumentKind.DIAL_INDICATOR)
    assert "350 μm" in render_svg(dial, 35, show_reading=True)


def test_dial_hands_rotate_with_the_position():
    spec = default_spec(InstrumentKind.DIAL_INDICATOR)
    svg = render_svg(spec, 935)
    # 935 ticks: hand at 126 degrees into its revolution, counter at 324.
    assert 'transform="rotate(126.000000' in svg
    assert 'transform="rotate(324.000000' in svg
    at_zero = render_svg(spec, 0)
    assert 'transform="rotate(0.000000' in at_zero


def test_micrometer_strip_highlights_the_current_division():
    spec = default_spec(InstrumentKind.MICROMETER)
    svg = render_svg(spec, 1234, show_reading=True)  # thimble index 34
    assert svg.count("coincide") >= 2  # stylesheet rule + applied class
    assert "sleeve 24 × 0.5 mm + thimble 34 × 0.01 mm = 12.34 mm" in svg


def test_caliper_highlight_lands_on_the_coinciding_mark():
    spec = default_spec(InstrumentKind.CALIPER)
    svg = render_svg(spec, 123, show_reading=True)
    marked = [
        line for line in svg.splitlines() if 'class="mark' in line and "coincide" in line
    ]
    assert len(marked) == 1
