"""Exercise drawing, grading, and per-session score keeping.

The generator is a bit-exact splitmix64 so that exercise streams replay
identically from a seed, no matter which front end (CLI, HTTP service)
consumed them.  Grading compares exact rationals — an answer is correct
iff it differs from the true value by at most the tolerance, which
defaults to zero ticks.
"""

from __future__ import annotations

import secrets
import string
import time
from dataclasses import dataclass, field

from vmlab.instruments import reading_text
from vmlab.model import (
    ALL_KINDS,
    InstrumentKind,
    InstrumentSpec,
    LabError,
    TickPosition,
    format_value,
    parse_answer,
    ticks_to_value,
)

CORRECT_MESSAGE = "Well done"
INCORRECT_MESSAGE = "Sorry, wrong answer!"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class AlreadyAnsweredError(LabError):
    """The exercise has been graded; a session gets one attempt each."""


class SplitMix64:
    """splitmix64 with one 64-bit word of state, reproducible bit for bit."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform_int(self, lo: int, hi: int) -> int:
        """Unbiased draw from [lo, hi] by rejection below the last full cycle."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        n = hi - lo + 1
        limit = ((1 << 64) // n) * n
        while True:
            z = self.next_u64()
            if z < limit:
                return lo + (z % n)


# Ids are lowercase letters only: 21 of them carry just under 99 bits, and
# an id can never collide with a numeric reading string by construction.
_ID_ALPHABET = string.ascii_lowercase
_ID_LENGTH = 21


def new_id() -> str:
    return "".join(secrets.choice(_ID_ALPHABET) for _ in range(_ID_LENGTH))


@dataclass
class Exercise:
    """One measurement task.  ``target`` is the hidden true position."""

    id: str
    kind: InstrumentKind
    target: TickPosition
    seed_index: int
    answered: bool = False


def draw_target(
    rng: SplitMix64, spec: InstrumentSpec, previous: TickPosition | None = None
) -> TickPosition:
    """Draw a non-zero target; redraw once if it repeats the previous one."""
    target = rng.uniform_int(1, spec.range_max_ticks)
    if previous is not None and target == previous:
        target = rng.uniform_int(1, spec.range_max_ticks)
    return target


def new_exercise(
    rng: SplitMix64,
    spec: InstrumentSpec,
    previous_target: TickPosition | None = None,
    seed_index: int = 0,
    exercise_id: str | None = None,
) -> Exercise:
    target = draw_target(rng, spec, previous_target)
    return Exercise(
        id=exercise_id if exercise_id is not None else new_id(),
        kind=spec.kind,
        target=target,
        seed_index=seed_index,
    )


@dataclass(frozen=True)
class GradeResult:
    verdict: str  # "correct" | "incorrect"
    message: str
    correct_value: str | None = None


def evaluate_answer(
    spec: InstrumentSpec,
    target: TickPosition,
    answer_text: str,
    tolerance_ticks: int = 0,
) -> GradeResult:
    """Pure verdict for an answer against a target position.

    On a wrong answer the formatted true value is included so it can be
    shown after the fact.
    """
    if tolerance_ticks < 0:
        raise ValueError("tolerance must be non-negative")
    answer = parse_answer(spec, answer_text)
    truth = ticks_to_value(spec, target)
    difference = abs(answer.as_fraction() - truth.as_fraction())
    if difference <= tolerance_ticks * spec.least_count_display:
        return GradeResult("correct", CORRECT_MESSAGE)
    return GradeResult(
        "incorrect", INCORRECT_MESSAGE, correct_value=format_value(spec, target)
    )


def grade(
    spec: InstrumentSpec,
    exercise: Exercise,
    answer_text: str,
    tolerance_ticks: int = 0,
) -> GradeResult:
    """Grade the single allowed attempt.

    A malformed answer raises before the exercise is touched, so it does
    not use up the attempt.
    """
    if exercise.answered:
        raise AlreadyAnsweredError(f"exercise {exercise.id} is already answered")
    result = evaluate_answer(spec, exercise.target, answer_text, tolerance_ticks)
    exercise.answered = True
    return result


def reveal(spec: InstrumentSpec, exercise: Exercise) -> str:
    """Worked reading for the exercise's target; does not close the exercise."""
    return reading_text(spec, exercise.target)


@dataclass(frozen=True)
class AttemptRecord:
    exercise_id: str
    kind: InstrumentKind
    answer_raw: str
    verdict: str
    at: float


@dataclass
class Session:
    id: str
    created_at: float
    attempts: list[AttemptRecord] = field(default_factory=list)


def submit_answer(
    session: Session,
    spec: InstrumentSpec,
    exercise: Exercise,
    answer_text: str,
    tolerance_ticks: int = 0,
    at: float | None = None,
) -> GradeResult:
    """Grade and record in one step; malformed answers record nothing."""
    result = grade(spec, exercise, answer_text, tolerance_ticks)
    session.attempts.append(
        AttemptRecord(
            exercise_id=exercise.id,
            kind=exercise.kind,
            answer_raw=answer_text,
            verdict=result.verdict,
            at=time.time() if at is None else at,
        )
    )
    return result


@dataclass(frozen=True, eq=False)
class KindStats:
    attempts: int
    correct: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.attempts if self.attempts else 0.0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KindStats):
            return NotImplemented
        return (self.attempts, self.correct) == (other.attempts, other.correct)

    def __hash__(self) -> int:
        return hash((self.attempts, self.correct))


@dataclass
class SessionStats:
    overall: KindStats
    per_kind: dict[InstrumentKind, KindStats]


def session_stats(session: Session) -> SessionStats:
    """Attempt and correct counts, overall and per instrument."""
    counts = {kind: [0, 0] for kind in ALL_KINDS}
    for attempt in session.attempts:
        counts[attempt.kind][0] += 1
        if attempt.verdict == "correct":
            counts[attempt.kind][1] += 1
    per_kind = {kind: KindStats(a, c) for kind, (a, c) in counts.items()}
    overall = KindStats(
        sum(s.attempts for s in per_kind.values()),
        sum(s.correct for s in per_kind.values()),
    )
    return SessionStats(overall=overall, per_kind=per_kind)
