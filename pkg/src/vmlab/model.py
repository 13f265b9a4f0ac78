"""Core value model for the virtual metrology lab.

Every position on a simulated instrument is an integer count of the
instrument's least count (a "tick").  All value arithmetic stays in exact
rationals, so displayed readings can be reproduced, parsed back, and
compared without floating point anywhere.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

#: A position expressed as a whole number of least-count steps from zero.
TickPosition = int


class LabError(Exception):
    """Base class for domain errors raised by the lab."""


class SpecError(LabError):
    """An instrument description, or a value built against one, is inconsistent."""


class OutOfRangeError(LabError):
    """A tick position or reading component lies outside the instrument's range."""


class MalformedAnswerError(LabError):
    """An answer string does not parse as a plain decimal number."""


class Unit(enum.Enum):
    """Display units used by the instruments."""

    MM = "mm"
    MICROMETRE = "μm"
    DEGREE = "degree"

    @property
    def dimension(self) -> str:
        return "angle" if self is Unit.DEGREE else "length"

    @property
    def symbol(self) -> str:
        """The glyph used in rendered reading text."""
        return "°" if self is Unit.DEGREE else self.value


# Factor converting a magnitude in `unit` into the base unit of its
# dimension (mm for lengths, degrees for angles).
_BASE_FACTOR = {
    Unit.MM: Fraction(1),
    Unit.MICROMETRE: Fraction(1, 1000),
    Unit.DEGREE: Fraction(1),
}


@dataclass(frozen=True, eq=False)
class ExactValue:
    """An exact rational magnitude tagged with its display unit.

    Stored in lowest terms with a positive denominator.  Comparisons
    between values of the same dimension are exact (1 mm == 1000 μm);
    comparing across dimensions raises :class:`SpecError`.
    """

    num: int
    den: int
    unit: Unit

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise SpecError(f"denominator must be positive, got {self.den}")
        g = math.gcd(self.num, self.den)
        if g > 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def in_base_unit(self) -> Fraction:
        """The magnitude converted to mm (lengths) or degrees (angles)."""
        return self.as_fraction() * _BASE_FACTOR[self.unit]

    def _comparable(self, other: ExactValue) -> None:
        if self.unit.dimension != other.unit.dimension:
            raise SpecError(
                f"cannot compare {self.unit.dimension} with {other.unit.dimension}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactValue):
            return NotImplemented
        self._comparable(other)
        return self.in_base_unit() == other.in_base_unit()

    def __hash__(self) -> int:
        return hash((self.unit.dimension, self.in_base_unit()))

    def __lt__(self, other: ExactValue) -> bool:
        self._comparable(other)
        return self.in_base_unit() < other.in_base_unit()

    def __le__(self, other: ExactValue) -> bool:
        self._comparable(other)
        return self.in_base_unit() <= other.in_base_unit()


class InstrumentKind(enum.Enum):
    """The four simulated instruments, keyed by their URL/CSV token."""

    CALIPER = "caliper"
    MICROMETER = "micrometer"
    DIAL_INDICATOR = "dial"
    PROTRACTOR = "protractor"

    @property
    def display_name(self) -> str:
        return _DISPLAY_NAMES[self]


_DISPLAY_NAMES = {
    InstrumentKind.CALIPER: "Vernier caliper",
    InstrumentKind.MICROMETER: "Micrometer",
    InstrumentKind.DIAL_INDICATOR: "Dial indicator",
    InstrumentKind.PROTRACTOR: "Protractor",
}

ALL_KINDS: tuple[InstrumentKind, ...] = tuple(InstrumentKind)


@dataclass(frozen=True)
class InstrumentSpec:
    """Static description of one instrument's scales.

    ``least_count_num``/``least_count_den`` give the least count in the
    instrument's base unit (mm for lengths, degrees for angles); conversion
    into ``display_unit`` happens in :func:`ticks_to_value`.  A main-scale
    division always spans ``main_division_ticks`` least counts exactly, and
    the range is a whole number of main divisions.
    """

    kind: InstrumentKind
    dimension: str
    least_count_num: int
    least_count_den: int
    range_max_ticks: int
    main_division_ticks: int
    display_unit: Unit
    display_decimals: int
    vernier_divisions: int | None = None
    divisions_per_revolution: int | None = None

    def __post_init__(self) -> None:
        if self.least_count_num <= 0 or self.least_count_den <= 0:
            raise SpecError("least count must be a positive rational")
        if self.range_max_ticks <= 0:
            raise SpecError("range must be positive")
        if self.main_division_ticks <= 0:
            raise SpecError("main division must span at least one tick")
        if self.display_decimals < 0:
            raise SpecError("display decimals must be non-negative")
        if self.dimension not in ("length", "angle"):
            raise SpecError(f"unknown dimension: {self.dimension!r}")
        if self.display_unit.dimension != self.dimension:
            raise SpecError(
                f"display unit {self.display_unit.value} does not measure {self.dimension}"
            )
        if self.vernier_divisions is not None:
            if self.vernier_divisions != self.main_division_ticks:
                raise SpecError(
                    "vernier divisions must equal the ticks in one main division"
                )
            if self.vernier_divisions < 2:
                raise SpecError("a vernier needs at least two divisions")
        if self.divisions_per_revolution is not None and self.divisions_per_revolution <= 0:
            raise SpecError("divisions per revolution must be positive")
        if self.range_max_ticks % self.main_division_ticks != 0:
            raise SpecError("range must be a whole number of main divisions")
        scaled = self.least_count_display * 10**self.display_decimals
        if scaled.denominator != 1:
            raise SpecError(
                f"{self.display_decimals} decimals cannot render a least count of "
                f"{self.least_count_display} {self.display_unit.value} exactly"
            )

    @property
    def least_count(self) -> Fraction:
        """Least count in the base unit (mm or degree)."""
        return Fraction(self.least_count_num, self.least_count_den)

    @property
    def display_factor(self) -> Fraction:
        """Multiplier from the base unit into the display unit."""
        return 1 / _BASE_FACTOR[self.display_unit]

    @property
    def least_count_display(self) -> Fraction:
        return self.least_count * self.display_factor

    @property
    def main_division(self) -> Fraction:
        """Span of one main-scale division, in the base unit."""
        return self.least_count * self.main_division_ticks

    @property
    def range_divisions(self) -> int:
        return self.range_max_ticks // self.main_division_ticks


def default_spec(kind: InstrumentKind) -> InstrumentSpec:
    """Catalog defaults for the four instruments."""
    if kind is InstrumentKind.CALIPER:
        # 0.1 mm vernier over a 150 mm beam; 10 vernier divisions span 9 mm.
        return InstrumentSpec(
            kind=kind,
            dimension="length",
            least_count_num=1,
            least_count_den=10,
            range_max_ticks=1500,
            main_division_ticks=10,
            display_unit=Unit.MM,
            display_decimals=1,
            vernier_divisions=10,
        )
    if kind is InstrumentKind.MICROMETER:
        # 0.01 mm thimble; one sleeve division is 0.5 mm; 25 mm travel.
        return InstrumentSpec(
            kind=kind,
            dimension="length",
            least_count_num=1,
            least_count_den=100,
            range_max_ticks=2500,
            main_division_ticks=50,
            display_unit=Unit.MM,
            display_decimals=2,
        )
    if kind is InstrumentKind.DIAL_INDICATOR:
        # 0.01 mm per face division, read out in μm; 100 divisions per rev,
        # numbered every 10, over a 10 mm travel.
        return InstrumentSpec(
            kind=kind,
            dimension="length",
            least_count_num=1,
            least_count_den=100,
            range_max_ticks=1000,
            main_division_ticks=10,
            display_unit=Unit.MICROMETRE,
            display_decimals=0,
            divisions_per_revolution=100,
        )
    if kind is InstrumentKind.PROTRACTOR:
        # 0.1° vernier over a half circle; 10 vernier divisions span 9°.
        return InstrumentSpec(
            kind=kind,
            dimension="angle",
            least_count_num=1,
            least_count_den=10,
            range_max_ticks=1800,
            main_division_ticks=10,
            display_unit=Unit.DEGREE,
            display_decimals=1,
            vernier_divisions=10,
        )
    raise SpecError(f"unknown instrument kind: {kind!r}")


def check_ticks(spec: InstrumentSpec, ticks: TickPosition) -> None:
    """Raise :class:`OutOfRangeError` unless 0 <= ticks <= range."""
    if not 0 <= ticks <= spec.range_max_ticks:
        raise OutOfRangeError(
            f"{ticks} outside [0, {spec.range_max_ticks}] for {spec.kind.value}"
        )


def ticks_to_value(spec: InstrumentSpec, ticks: TickPosition) -> ExactValue:
    """Exact displayed magnitude of a tick position, in the display unit."""
    check_ticks(spec, ticks)
    v = ticks * spec.least_count * spec.display_factor
    return ExactValue(v.numerator, v.denominator, spec.display_unit)


def format_value(spec: InstrumentSpec, ticks: TickPosition) -> str:
    """Render a tick position with exactly ``display_decimals`` digits."""
    value = ticks_to_value(spec, ticks).as_fraction()
    scaled = value * 10**spec.display_decimals
    if scaled.denominator != 1:  # unreachable for a validated spec
        raise SpecError(f"{value} does not terminate at {spec.display_decimals} decimals")
    n = int(scaled)
    if spec.display_decimals == 0:
        return str(n)
    whole, frac = divmod(n, 10**spec.display_decimals)
    return f"{whole}.{frac:0{spec.display_decimals}d}"


# Plain ASCII digits only: \d would also accept other Unicode decimals.
_ANSWER_RE = re.compile(r"\s*([0-9]+)(?:\.([0-9]+))?\s*")


def parse_answer(spec: InstrumentSpec, text: str) -> ExactValue:
    """Parse a student answer into an exact value in the display unit.

    Accepts surrounding whitespace and a plain decimal number: integer
    digits with at most one '.' followed by fraction digits.  Anything
    else (signs, commas, units, non-ASCII digits) raises
    :class:`MalformedAnswerError`.
    """
    if not isinstance(text, str):
        raise MalformedAnswerError(f"answer must be text, got {type(text).__name__}")
    m = _ANSWER_RE.fullmatch(text)
    if m is None:
        raise MalformedAnswerError(f"not a plain decimal number: {text!r}")
    whole, frac = m.group(1), m.group(2)
    if frac is None:
        v = Fraction(int(whole))
    else:
        v = Fraction(int(whole + frac), 10 ** len(frac))
    return ExactValue(v.numerator, v.denominator, spec.display_unit)


def decimal_string(value: Fraction) -> str:
    """Shortest exact decimal for a non-negative rational.

    Used for least-count factors in reading text ("0.1", "0.5", "10").
    Raises :class:`SpecError` when the denominator is not of the form
    2^a * 5^b, i.e. the value has no terminating decimal.
    """
    if value < 0:
        raise SpecError(f"expected a non-negative value, got {value}")
    for k in range(0, 32):
        scaled = value * 10**k
        if scaled.denominator == 1:
            n = int(scaled)
            if k == 0:
                return str(n)
            whole, frac = divmod(n, 10**k)
            return f"{whole}.{frac:0{k}d}"
    raise SpecError(f"{value} has no terminating decimal expansion")
