"""Tests for scale geometry, decomposition, coincidence, and reading text."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vmlab.instruments import (
    CaliperReading,
    DialReading,
    MicrometerReading,
    ProtractorReading,
    alignment_distances,
    best_aligned_mark,
    coincidence_index,
    compose,
    decompose,
    geometry_template,
    moving_transform,
    reading_text,
    revolution_transform,
)
from vmlab.model import (
    ALL_KINDS,
    InstrumentKind,
    InstrumentSpec,
    OutOfRangeError,
    SpecError,
    Unit,
    default_spec,
)

CALIPER = default_spec(InstrumentKind.CALIPER)
MICROMETER = default_spec(InstrumentKind.MICROMETER)
DIAL = default_spec(InstrumentKind.DIAL_INDICATOR)
PROTRACTOR = default_spec(InstrumentKind.PROTRACTOR)


def test_decompose_examples() -> None:
    assert decompose(CALIPER, 123) == CaliperReading(main_mm=12, vernier_index=3)
    assert decompose(MICROMETER, 1234) == MicrometerReading(
        sleeve_divisions=24, thimble_index=34
    )
    assert decompose(DIAL, 35) == DialReading(revolutions=0, dial_index=35)
    assert decompose(DIAL, 935) == DialReading(revolutions=9, dial_index=35)
    assert decompose(PROTRACTOR, 160) == ProtractorReading(degrees=16, vernier_index=0)
    assert decompose(PROTRACTOR, 1799) == ProtractorReading(degrees=179, vernier_index=9)


def test_compose_decompose_roundtrip_everywhere() -> None:
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        for ticks in range(0, spec.range_max_ticks + 1):
            assert compose(spec, decompose(spec, ticks)) == ticks


def test_compose_rejects_bad_components() -> None:
    with pytest.raises(OutOfRangeError):
        compose(CALIPER, CaliperReading(main_mm=12, vernier_index=10))
    with pytest.raises(OutOfRangeError):
        compose(CALIPER, CaliperReading(main_mm=-1, vernier_index=3))
    with pytest.raises(OutOfRangeError):
        compose(CALIPER, CaliperReading(main_mm=150, vernier_index=1))  # past range end
    with pytest.raises(OutOfRangeError):
        compose(DIAL, DialReading(revolutions=0, dial_index=100))
    with pytest.raises(SpecError):
        compose(CALIPER, DialReading(revolutions=0, dial_index=3))


def test_coincidence_examples() -> None:
    assert coincidence_index(CALIPER, 123) == 3
    assert coincidence_index(CALIPER, 120) == 0
    assert coincidence_index(PROTRACTOR, 1799) == 9
    with pytest.raises(SpecError):
        coincidence_index(MICROMETER, 100)
    with pytest.raises(SpecError):
        coincidence_index(DIAL, 100)


def test_caliper_geometry() -> None:
    geo = geometry_template(CALIPER)
    assert geo.layout == "linear"
    # Beam runs one vernier overhang (9 mm) past the 150 mm range.
    assert len(geo.fixed_marks) == 160
    assert geo.fixed_marks[-1].axis_pos == 159
    assert geo.fixed_marks[150].label == "150"
    assert geo.fixed_marks[155].label is None  # overhang is unlabelled
    assert len(geo.moving_marks) == 11
    assert geo.moving_marks[10].axis_pos == 9  # ten divisions span nine mm
    assert geo.moving_marks[5].axis_pos == Fraction(9, 2)
    assert geo.pointer == ()


def test_micrometer_geometry() -> None:
    geo = geometry_template(MICROMETER)
    assert geo.layout == "linear"
    assert len(geo.fixed_marks) == 51
    assert geo.fixed_marks[1].axis_pos == Fraction(1, 2)
    assert geo.fixed_marks[10].label == "5"
    assert geo.fixed_marks[3].tier == "minor"
    assert len(geo.moving_marks) == 50
    assert geo.moving_marks[34].axis_pos == Fraction(34, 100)


def test_dial_geometry() -> None:
    geo = geometry_template(DIAL)
    assert geo.layout == "circular"
    assert len(geo.fixed_marks) == 100
    assert geo.fixed_marks[35].axis_pos == Fraction(35 * 18, 5)
    assert geo.fixed_marks[30].label == "30"
    assert geo.fixed_marks[31].label is None
    assert geo.moving_marks == ()
    assert [p.label for p in geo.pointer] == ["main", "revolutions"]


def test_protractor_geometry() -> None:
    geo = geometry_template(PROTRACTOR)
    assert geo.layout == "circular"
    assert len(geo.fixed_marks) == 190  # 0..180 degrees plus 9 degrees overhang
    assert geo.fixed_marks[-1].axis_pos == 189
    assert geo.fixed_marks[180].label == "180"
    assert geo.moving_marks[5].axis_pos == Fraction(9, 2)


def test_geometry_is_position_independent() -> None:
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        assert geometry_template(spec) == geometry_template(spec)


def test_moving_transforms() -> None:
    t = moving_transform(CALIPER, 123)
    assert (t.kind, t.amount) == ("translation", Fraction(123, 10))
    t = moving_transform(MICROMETER, 1234)
    assert (t.kind, t.amount) == ("translation", Fraction(617, 50))
    t = moving_transform(PROTRACTOR, 160)
    assert (t.kind, t.amount) == ("translation", 16)
    t = moving_transform(DIAL, 35)
    assert (t.kind, t.amount) == ("rotation", 126)
    t = moving_transform(DIAL, 935)
    assert (t.kind, t.amount) == ("rotation", 126)  # same face angle each revolution
    r = revolution_transform(DIAL, 935)
    assert (r.kind, r.amount) == ("rotation", 324)
    assert revolution_transform(DIAL, 35).amount == 0
    with pytest.raises(SpecError):
        revolution_transform(CALIPER, 100)


def test_oracle_matches_examples() -> None:
    assert best_aligned_mark(CALIPER, 123) == 3
    assert best_aligned_mark(CALIPER, 120) == 0  # both end marks align; report 0
    assert best_aligned_mark(CALIPER, 1500) == 0
    assert best_aligned_mark(PROTRACTOR, 1799) == 9
    assert best_aligned_mark(PROTRACTOR, 1800) == 0


def test_oracle_agrees_with_modular_rule_on_sample() -> None:
    for spec in (CALIPER, PROTRACTOR):
        for ticks in range(0, spec.range_max_ticks + 1, 7):
            expected = coincidence_index(spec, ticks)
            got = best_aligned_mark(spec, ticks)
            if expected == 0:
                assert got == 0
            else:
                assert got == expected


def test_oracle_on_twenty_division_caliper() -> None:
    spec = InstrumentSpec(
        kind=InstrumentKind.CALIPER,
        dimension="length",
        least_count_num=1,
        least_count_den=20,
        range_max_ticks=3000,
        main_division_ticks=20,
        display_unit=Unit.MM,
        display_decimals=2,
        vernier_divisions=20,
    )
    for ticks in range(0, spec.range_max_ticks + 1):
        assert best_aligned_mark(spec, ticks) == coincidence_index(spec, ticks)


def test_alignment_distances_structure() -> None:
    # Away from exact coincidence the runner-up sits one least count off.
    distances = alignment_distances(CALIPER, 123)
    assert len(distances) == 11
    assert distances[3] == 0
    assert sorted(set(distances))[1] == Fraction(1, 10)
    distances = alignment_distances(PROTRACTOR, 1799)
    assert distances[9] == 0
    assert sorted(set(distances))[1] == Fraction(1, 10)


def test_reading_text_golden() -> None:
    assert reading_text(CALIPER, 123) == "main 12 mm + vernier 3 × 0.1 mm = 12.3 mm"
    assert (
        reading_text(MICROMETER, 1234)
        == "sleeve 24 × 0.5 mm + thimble 34 × 0.01 mm = 12.34 mm"
    )
    assert reading_text(DIAL, 35) == "revolutions 0 + dial 35 × 10 μm = 350 μm"
    assert reading_text(DIAL, 935) == "revolutions 9 + dial 35 × 10 μm = 9350 μm"
    assert reading_text(PROTRACTOR, 160) == "main 16 ° + vernier 0 × 0.1 ° = 16.0 °"
    assert reading_text(PROTRACTOR, 1799) == "main 179 ° + vernier 9 × 0.1 ° = 179.9 °"


def test_reading_text_out_of_range() -> None:
    with pytest.raises(OutOfRangeError):
        reading_text(CALIPER, 1501)
