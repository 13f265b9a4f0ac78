"""Scale geometry and reading logic for the four instruments.

A tick position decomposes into the parts a student actually reads off:
whole main-scale divisions plus a vernier coincidence, sleeve plus thimble,
or revolutions plus dial divisions.  The vernier coincidence is computed
twice on purpose — once by modular arithmetic and once by brute force over
the geometric mark positions — so each can check the other.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from vmlab.model import (
    InstrumentKind,
    InstrumentSpec,
    OutOfRangeError,
    SpecError,
    TickPosition,
    check_ticks,
    decimal_string,
    format_value,
)


@dataclass(frozen=True)
class CaliperReading:
    main_mm: int
    vernier_index: int


@dataclass(frozen=True)
class MicrometerReading:
    sleeve_divisions: int
    thimble_index: int


@dataclass(frozen=True)
class DialReading:
    revolutions: int
    dial_index: int


@dataclass(frozen=True)
class ProtractorReading:
    degrees: int
    vernier_index: int


Reading = Union[CaliperReading, MicrometerReading, DialReading, ProtractorReading]


@dataclass(frozen=True)
class Mark:
    """One graduation line on a scale.

    ``axis_pos`` is an exact rational coordinate along the scale axis, in
    mm for linear layouts and degrees for circular ones.
    """

    scale: str  # "fixed" | "moving"
    axis_pos_num: int
    axis_pos_den: int
    tier: str  # "major" | "minor"
    label: str | None = None

    @property
    def axis_pos(self) -> Fraction:
        return Fraction(self.axis_pos_num, self.axis_pos_den)


@dataclass(frozen=True)
class ScaleGeometry:
    """Position-independent mark layout for one instrument."""

    layout: str  # "linear" | "circular"
    fixed_marks: tuple[Mark, ...]
    moving_marks: tuple[Mark, ...]
    pointer: tuple[Mark, ...]
    spec: InstrumentSpec


@dataclass(frozen=True)
class MovingTransform:
    """How far the moving part sits from its zero pose at some position.

    ``amount`` is exact: display units for a translation, degrees for a
    rotation.
    """

    kind: str  # "translation" | "rotation"
    amount_num: int
    amount_den: int

    @property
    def amount(self) -> Fraction:
        return Fraction(self.amount_num, self.amount_den)


def decompose(spec: InstrumentSpec, ticks: TickPosition) -> Reading:
    """Split a position into the parts read off the instrument."""
    check_ticks(spec, ticks)
    if spec.kind is InstrumentKind.CALIPER:
        main, vernier = divmod(ticks, spec.main_division_ticks)
        return CaliperReading(main_mm=main, vernier_index=vernier)
    if spec.kind is InstrumentKind.MICROMETER:
        sleeve, thimble = divmod(ticks, spec.main_division_ticks)
        return MicrometerReading(sleeve_divisions=sleeve, thimble_index=thimble)
    if spec.kind is InstrumentKind.DIAL_INDICATOR:
        assert spec.divisions_per_revolution is not None
        revs, index = divmod(ticks, spec.divisions_per_revolution)
        return DialReading(revolutions=revs, dial_index=index)
    if spec.kind is InstrumentKind.PROTRACTOR:
        main, vernier = divmod(ticks, spec.main_division_ticks)
        return ProtractorReading(degrees=main, vernier_index=vernier)
    raise SpecError(f"unknown instrument kind: {spec.kind!r}")


def compose(spec: InstrumentSpec, reading: Reading) -> TickPosition:
    """Inverse of :func:`decompose`, with component bounds checked."""
    if spec.kind is InstrumentKind.CALIPER:
        if not isinstance(reading, CaliperReading):
            raise SpecError(f"expected a caliper reading, got {type(reading).__name__}")
        ticks = _recombine(reading.main_mm, reading.vernier_index, spec.main_division_ticks)
    elif spec.kind is InstrumentKind.MICROMETER:
        if not isinstance(reading, MicrometerReading):
            raise SpecError(f"expected a micrometer reading, got {type(reading).__name__}")
        ticks = _recombine(
            reading.sleeve_divisions, reading.thimble_index, spec.main_division_ticks
        )
    elif spec.kind is InstrumentKind.DIAL_INDICATOR:
        if not isinstance(reading, DialReading):
            raise SpecError(f"expected a dial reading, got {type(reading).__name__}")
        assert spec.divisions_per_revolution is not None
        ticks = _recombine(
            reading.revolutions, reading.dial_index, spec.divisions_per_revolution
        )
    elif spec.kind is InstrumentKind.PROTRACTOR:
        if not isinstance(reading, ProtractorReading):
            raise SpecError(f"expected a protractor reading, got {type(reading).__name__}")
        ticks = _recombine(reading.degrees, reading.vernier_index, spec.main_division_ticks)
    else:
        raise SpecError(f"unknown instrument kind: {spec.kind!r}")
    check_ticks(spec, ticks)
    return ticks


def _recombine(whole: int, part: int, parts_per_whole: int) -> int:
    if whole < 0:
        raise OutOfRangeError(f"whole component must be non-negative, got {whole}")
    if not 0 <= part < parts_per_whole:
        raise OutOfRangeError(f"fine component {part} outside [0, {parts_per_whole})")
    return whole * parts_per_whole + part


def coincidence_index(spec: InstrumentSpec, ticks: TickPosition) -> int:
    """Which vernier mark lines up with a fixed mark, by modular arithmetic."""
    _require_vernier(spec)
    check_ticks(spec, ticks)
    return ticks % spec.vernier_divisions  # type: ignore[operator]


def _require_vernier(spec: InstrumentSpec) -> None:
    if spec.vernier_divisions is None:
        raise SpecError(f"{spec.kind.value} has no vernier scale")


@lru_cache(maxsize=None)
def geometry_template(spec: InstrumentSpec) -> ScaleGeometry:
    """Position-independent mark layout; pure function of the spec.

    For vernier instruments the fixed scale runs one vernier overhang
    (``vernier_divisions - 1`` main divisions) past the range end, so the
    last vernier mark always has a fixed partner to line up with.
    """
    if spec.kind in (InstrumentKind.CALIPER, InstrumentKind.MICROMETER):
        layout = "linear"
    else:
        layout = "circular"

    if spec.kind is InstrumentKind.DIAL_INDICATOR:
        return ScaleGeometry(
            layout=layout,
            fixed_marks=_dial_face_marks(spec),
            moving_marks=(),
            pointer=(
                Mark("moving", 0, 1, "major", "main"),
                Mark("moving", 0, 1, "major", "revolutions"),
            ),
            spec=spec,
        )

    if spec.kind is InstrumentKind.MICROMETER:
        return ScaleGeometry(
            layout=layout,
            fixed_marks=_sleeve_marks(spec),
            moving_marks=_thimble_marks(spec),
            pointer=(),
            spec=spec,
        )

    # Caliper and protractor: a main scale plus a vernier.
    assert spec.vernier_divisions is not None
    return ScaleGeometry(
        layout=layout,
        fixed_marks=_main_scale_marks(spec, overhang=spec.vernier_divisions - 1),
        moving_marks=_vernier_marks(spec),
        pointer=(),
        spec=spec,
    )


def _main_scale_marks(spec: InstrumentSpec, overhang: int) -> tuple[Mark, ...]:
    marks = []
    division = spec.main_division
    for i in range(spec.range_divisions + overhang + 1):
        pos = i * division
        major = i % 10 == 0
        label = decimal_string(pos) if major and i <= spec.range_divisions else None
        marks.append(
            Mark(
                "fixed",
                pos.numerator,
                pos.denominator,
                "major" if major else "minor",
                label,
            )
        )
    return tuple(marks)


def _vernier_marks(spec: InstrumentSpec) -> tuple[Mark, ...]:
    assert spec.vernier_divisions is not None
    n = spec.vernier_divisions
    step = Fraction(n - 1, n) * spec.main_division
    label_every = max(1, n // 10)
    marks = []
    for j in range(n + 1):
        pos = j * step
        labelled = j % label_every == 0
        marks.append(
            Mark(
                "moving",
                pos.numerator,
                pos.denominator,
                "major" if labelled else "minor",
                str(j) if labelled else None,
            )
        )
    return tuple(marks)


def _sleeve_marks(spec: InstrumentSpec) -> tuple[Mark, ...]:
    marks = []
    division = spec.main_division  # 0.5 mm by default
    for i in range(spec.range_divisions + 1):
        pos = i * division
        major = pos.denominator == 1  # whole millimetres stand taller
        label = decimal_string(pos) if (pos / 5).denominator == 1 else None
        marks.append(
            Mark(
                "fixed",
                pos.numerator,
                pos.denominator,
                "major" if major else "minor",
                label,
            )
        )
    return tuple(marks)


def _thimble_marks(spec: InstrumentSpec) -> tuple[Mark, ...]:
    marks = []
    for j in range(spec.main_division_ticks):
        pos = j * spec.least_count
        major = j % 5 == 0
        marks.append(
            Mark(
                "moving",
                pos.numerator,
                pos.denominator,
                "major" if major else "minor",
                str(j) if major else None,
            )
        )
    return tuple(marks)


def _dial_face_marks(spec: InstrumentSpec) -> tuple[Mark, ...]:
    assert spec.divisions_per_revolution is not None
    dpr = spec.divisions_per_revolution
    step = Fraction(360, dpr)
    marks = []
    for i in range(dpr):
        pos = i * step
        major = i % spec.main_division_ticks == 0
        marks.append(
            Mark(
                "fixed",
                pos.numerator,
                pos.denominator,
                "major" if major else "minor",
                str(i) if major else None,
            )
        )
    return tuple(marks)


def moving_transform(spec: InstrumentSpec, ticks: TickPosition) -> MovingTransform:
    """Pose of the moving part at a position: slide distance or hand angle."""
    check_ticks(spec, ticks)
    if spec.kind is InstrumentKind.DIAL_INDICATOR:
        assert spec.divisions_per_revolution is not None
        dpr = spec.divisions_per_revolution
        angle = (ticks % dpr) * Fraction(360, dpr)
        return MovingTransform("rotation", angle.numerator, angle.denominator)
    amount = ticks * spec.least_count
    return MovingTransform("translation", amount.numerator, amount.denominator)


def revolution_transform(spec: InstrumentSpec, ticks: TickPosition) -> MovingTransform:
    """Angle of the dial's revolution-counter hand."""
    if spec.kind is not InstrumentKind.DIAL_INDICATOR:
        raise SpecError(f"{spec.kind.value} has no revolution counter")
    check_ticks(spec, ticks)
    assert spec.divisions_per_revolution is not None
    revolutions_total = spec.range_max_ticks // spec.divisions_per_revolution
    angle = (ticks // spec.divisions_per_revolution) * Fraction(360, revolutions_total)
    return MovingTransform("rotation", angle.numerator, angle.denominator)


@lru_cache(maxsize=None)
def _alignment_arrays(spec: InstrumentSpec) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Template mark coordinates scaled to a common integer grid."""
    geo = geometry_template(spec)
    dens = [m.axis_pos_den for m in geo.fixed_marks + geo.moving_marks]
    scale = math.lcm(spec.least_count_den, *dens)
    fixed = tuple(sorted(m.axis_pos_num * (scale // m.axis_pos_den) for m in geo.fixed_marks))
    moving = tuple(m.axis_pos_num * (scale // m.axis_pos_den) for m in geo.moving_marks)
    return fixed, moving, scale


def _nearest_distance(fixed: tuple[int, ...], p: int) -> int:
    i = bisect.bisect_left(fixed, p)
    best: int | None = None
    if i < len(fixed):
        best = fixed[i] - p
    if i > 0:
        d = p - fixed[i - 1]
        if best is None or d < best:
            best = d
    assert best is not None
    return best


def alignment_distances(spec: InstrumentSpec, ticks: TickPosition) -> tuple[Fraction, ...]:
    """Distance from each vernier mark to its nearest fixed mark.

    Computed from the geometry template alone — mark coordinates plus the
    slide translation — with no modular shortcuts, so it can serve as an
    independent check on :func:`coincidence_index`.  Distances are in the
    instrument's base unit.
    """
    _require_vernier(spec)
    check_ticks(spec, ticks)
    fixed, moving, scale = _alignment_arrays(spec)
    t = ticks * spec.least_count_num * (scale // spec.least_count_den)
    return tuple(Fraction(_nearest_distance(fixed, local + t), scale) for local in moving)


def best_aligned_mark(spec: InstrumentSpec, ticks: TickPosition) -> int:
    """Index of the vernier mark closest to any fixed mark (smallest on ties)."""
    distances = alignment_distances(spec, ticks)
    best_j = 0
    for j, d in enumerate(distances):
        if d < distances[best_j]:
            best_j = j
    return best_j


def reading_text(spec: InstrumentSpec, ticks: TickPosition) -> str:
    """One-line worked reading, e.g. ``main 12 mm + vernier 3 × 0.1 mm = 12.3 mm``."""
    reading = decompose(spec, ticks)
    value = format_value(spec, ticks)
    symbol = spec.display_unit.symbol
    lc = decimal_string(spec.least_count_display)
    if isinstance(reading, CaliperReading):
        return (
            f"main {reading.main_mm} {symbol} + vernier {reading.vernier_index}"
            f" × {lc} {symbol} = {value} {symbol}"
        )
    if isinstance(reading, MicrometerReading):
        division = decimal_string(spec.main_division)
        return (
            f"sleeve {reading.sleeve_divisions} × {division} {symbol}"
            f" + thimble {reading.thimble_index} × {lc} {symbol} = {value} {symbol}"
        )
    if isinstance(reading, DialReading):
        return (
            f"revolutions {reading.revolutions} + dial {reading.dial_index}"
            f" × {lc} {symbol} = {value} {symbol}"
        )
    return (
        f"main {reading.degrees} {symbol} + vernier {reading.vernier_index}"
        f" × {lc} {symbol} = {value} {symbol}"
    )
