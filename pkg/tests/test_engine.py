"""Tests for the generator, exercise drawing, grading, and stats."""

from __future__ import annotations

import pytest

from vmlab.engine import (
    CORRECT_MESSAGE,
    INCORRECT_MESSAGE,
    AlreadyAnsweredError,
    Exercise,
    SplitMix64,
    draw_target,
    grade,
    new_exercise,
    new_id,
    reveal,
    Session,
    session_stats,
    submit_answer,
)
from vmlab.model import (
    InstrumentKind,
    MalformedAnswerError,
    default_spec,
    format_value,
)

CALIPER = default_spec(InstrumentKind.CALIPER)
DIAL = default_spec(InstrumentKind.DIAL_INDICATOR)


def test_splitmix64_known_answers() -> None:
    gen = SplitMix64(0)
    assert gen.next_u64() == 0xE220A8397B1DCDAF
    assert gen.next_u64() == 0x6E789E6AA1B965F4
    assert gen.next_u64() == 0x06C45D188009454F


def test_seed_is_masked_to_64_bits() -> None:
    assert SplitMix64(2**64 + 5).state == SplitMix64(5).state


def test_uniform_frozen_sequences() -> None:
    gen = SplitMix64(7)
    first_ten = [gen.uniform_int(1, 1500) for _ in range(10)]
    assert first_ten == [988, 805, 847, 1204, 1175, 1306, 299, 1183, 486, 426]
    gen = SplitMix64(1)
    assert [gen.uniform_int(0, 9) for _ in range(6)] == [5, 9, 0, 5, 1, 8]


def test_uniform_degenerate_range_consumes_one_draw() -> None:
    gen = SplitMix64(42)
    twin = SplitMix64(42)
    assert gen.uniform_int(5, 5) == 5
    twin.next_u64()
    assert gen.state == twin.state


def test_uniform_rejects_empty_range() -> None:
    with pytest.raises(ValueError):
        SplitMix64(0).uniform_int(3, 2)


def test_uniform_counts_are_balanced() -> None:
    gen = SplitMix64(12345)
    counts = [0] * 10
    for _ in range(10000):
        counts[gen.uniform_int(0, 9)] += 1
    assert sum(counts) == 10000
    assert sum((c - 1000) ** 2 for c in counts) == 15110  # chi2 = 15.11 < 33.0


def test_draw_target_stays_in_range_and_nonzero() -> None:
    gen = SplitMix64(99)
    for _ in range(2000):
        target = draw_target(gen, CALIPER)
        assert 1 <= target <= 1500


def test_draw_target_redraws_once_on_repeat() -> None:
    # Seed 7 draws 988 first; presenting 988 as the previous target forces
    # a single redraw, which yields the next value in the stream.
    gen = SplitMix64(7)
    assert draw_target(gen, CALIPER, previous=988) == 805
    gen = SplitMix64(7)
    assert draw_target(gen, CALIPER, previous=123) == 988


def test_new_exercise_records_kind_and_index() -> None:
    gen = SplitMix64(7)
    ex = new_exercise(gen, CALIPER, seed_index=4)
    assert ex.kind is InstrumentKind.CALIPER
    assert ex.target == 988
    assert ex.seed_index == 4
    assert not ex.answered


def test_grade_correct_answer() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    result = grade(CALIPER, ex, "12.3")
    assert result.verdict == "correct"
    assert result.message == CORRECT_MESSAGE
    assert result.message == "Well done"
    assert result.correct_value is None
    assert ex.answered


def test_grade_wrong_answer_reveals_value() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    result = grade(CALIPER, ex, "12.4")
    assert result.verdict == "incorrect"
    assert result.message == INCORRECT_MESSAGE
    assert result.message == "Sorry, wrong answer!"
    assert result.correct_value == format_value(CALIPER, 123) == "12.3"


def test_grade_accepts_whitespace_and_padding() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    assert grade(CALIPER, ex, "  12.30 ").verdict == "correct"


def test_malformed_answer_does_not_spend_the_attempt() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    with pytest.raises(MalformedAnswerError):
        grade(CALIPER, ex, "12,3")
    assert not ex.answered
    assert grade(CALIPER, ex, "12.3").verdict == "correct"


def test_second_attempt_is_rejected() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    grade(CALIPER, ex, "12.3")
    with pytest.raises(AlreadyAnsweredError):
        grade(CALIPER, ex, "12.3")


def test_tolerance_in_ticks() -> None:
    for answer, expected in (("12.2", "correct"), ("12.4", "correct"), ("12.5", "incorrect")):
        ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
        assert grade(CALIPER, ex, answer, tolerance_ticks=1).verdict == expected
    with pytest.raises(ValueError):
        ex = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
        grade(CALIPER, ex, "12.3", tolerance_ticks=-1)


def test_reveal_keeps_exercise_open() -> None:
    ex = Exercise(id="a", kind=InstrumentKind.DIAL_INDICATOR, target=35, seed_index=0)
    assert reveal(DIAL, ex) == "revolutions 0 + dial 35 × 10 μm = 350 μm"
    assert not ex.answered


def test_submit_answer_records_attempts_and_stats() -> None:
    session = Session(id=new_id(), created_at=0.0)
    first = Exercise(id="a", kind=InstrumentKind.CALIPER, target=123, seed_index=0)
    second = Exercise(id="b", kind=InstrumentKind.CALIPER, target=200, seed_index=1)
    third = Exercise(id="c", kind=InstrumentKind.DIAL_INDICATOR, target=35, seed_index=2)
    fourth = Exercise(id="d", kind=InstrumentKind.DIAL_INDICATOR, target=70, seed_index=3)
    submit_answer(session, CALIPER, first, "12.3", at=1.0)
    submit_answer(session, CALIPER, second, "99.9", at=2.0)
    submit_answer(session, DIAL, third, "350", at=3.0)
    with pytest.raises(MalformedAnswerError):
        submit_answer(session, DIAL, fourth, "nope", at=4.0)
    assert not fourth.answered  # malformed submits leave the exercise open
    stats = session_stats(session)
    assert stats.overall.attempts == 3
    assert stats.overall.correct == 2
    assert stats.per_kind[InstrumentKind.CALIPER].attempts == 2
    assert stats.per_kind[InstrumentKind.CALIPER].correct == 1
    assert stats.per_kind[InstrumentKind.CALIPER].accuracy == 0.5
    assert stats.per_kind[InstrumentKind.DIAL_INDICATOR].correct == 1
    assert stats.per_kind[InstrumentKind.MICROMETER].attempts == 0
    assert stats.per_kind[InstrumentKind.MICROMETER].accuracy == 0.0


def test_ids_are_lowercase_letters() -> None:
    seen = {new_id() for _ in range(50)}
    assert len(seen) == 50
    for value in seen:
        assert len(value) == 21
        assert value.isalpha() and value.islower()
