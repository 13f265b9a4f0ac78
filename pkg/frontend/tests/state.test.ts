import { describe, expect, it, vi } from "vitest";

import { ApiError } from "../src/api";
import {
  DRAG_PX_PER_TICK,
  dragTo,
  initialState,
  parseHint,
  resetView,
  revealDuringQuiz,
  submitEntry,
  ViewState,
} from "../src/state";
import type { GradeDoc } from "../src/types";

function quizState(overrides: Partial<ViewState> = {}): ViewState {
  return {
    ...initialState(),
    mode: "quiz",
    ticks: 123,
    exercise: { id: "abc", ticks: 123, revealed: false, answered: false },
    ...overrides,
  };
}

function apiReturning(doc: GradeDoc) {
  return { submitAnswer: vi.fn().mockResolvedValue(doc) };
}

describe("dragTo", () => {
  it("moves one tick per configured pixel distance", () => {
    expect(dragTo(100, DRAG_PX_PER_TICK, 1500)).toBe(101);
    expect(dragTo(100, -3 * DRAG_PX_PER_TICK, 1500)).toBe(97);
  });

  it("snaps sub-tick jitter to the nearest tick", () => {
    expect(dragTo(100, DRAG_PX_PER_TICK * 0.4, 1500)).toBe(100);
    expect(dragTo(100, DRAG_PX_PER_TICK * 0.6, 1500)).toBe(101);
  });

  it("clamps to the scale ends", () => {
    expect(dragTo(3, -100 * DRAG_PX_PER_TICK, 1500)).toBe(0);
    expect(dragTo(1499, 100 * DRAG_PX_PER_TICK, 1500)).toBe(1500);
  });
});

describe("resetView", () => {
  it("returns explore mode to the zeroed view", () => {
    const messy: ViewState = {
      ...initialState(),
      ticks: 987,
      showReading: true,
      feedback: "whatever",
      feedbackTone: "info",
    };
    const reset = resetView(messy);
    expect(reset.ticks).toBe(0);
    expect(reset.showReading).toBe(false);
    expect(reset.feedback).toBe("");
  });

  it("keeps the quiz position pinned", () => {
    const state = quizState({ ticks: 456, exercise: { id: "x", ticks: 456, revealed: false, answered: false } });
    const reset = resetView(state);
    expect(reset.ticks).toBe(456);
    expect(reset.exercise).toEqual(state.exercise);
  });
});

describe("parseHint", () => {
  it("accepts plain decimals", () => {
    expect(parseHint("12.3")).toBeNull();
    expect(parseHint(" 350 ")).toBeNull();
    expect(parseHint("0")).toBeNull();
  });

  it("points at commas", () => {
    expect(parseHint("12,3")).toBe("Use a decimal point, not a comma.");
  });

  it("nudges on empty input", () => {
    expect(parseHint("")).toBe("Type the reading first.");
    expect(parseHint("   ")).toBe("Type the reading first.");
  });

  it("hints on anything else", () => {
    expect(parseHint("about 12")).toBe("Enter a plain decimal number, like 12.3.");
    expect(parseHint("-5")).toBe("Enter a plain decimal number, like 12.3.");
  });
});

describe("submitEntry", () => {
  it("shows the server verdict verbatim on a correct answer", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const next = await submitEntry(quizState(), api, "12.3");
    expect(api.submitAnswer).toHaveBeenCalledWith("abc", "12.3");
    expect(next.feedback).toBe("Well done");
    expect(next.feedbackTone).toBe("ok");
    expect(next.offerNext).toBe(true);
    expect(next.exercise?.answered).toBe(true);
    expect(next.busy).toBe(false);
  });

  it("shows the server verdict verbatim on a wrong answer", async () => {
    const api = apiReturning({
      verdict: "incorrect",
      message: "Sorry, wrong answer!",
      correct_value: "12.3",
    });
    const next = await submitEntry(quizState(), api, "12.4");
    expect(next.feedback).toBe("Sorry, wrong answer!");
    expect(next.feedbackTone).toBe("bad");
    expect(next.exercise?.answered).toBe(true);
  });

  it("rejects malformed text locally without spending the attempt", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const next = await submitEntry(quizState(), api, "12,3");
    expect(api.submitAnswer).not.toHaveBeenCalled();
    expect(next.feedback).toBe("Use a decimal point, not a comma.");
    expect(next.feedbackTone).toBe("info");
    expect(next.exercise?.answered).toBe(false);
  });

  it("ignores submits while a request is in flight", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const busy = quizState({ busy: true });
    const next = await submitEntry(busy, api, "12.3");
    expect(next).toBe(busy);
    expect(api.submitAnswer).not.toHaveBeenCalled();
  });

  it("refuses to grade a revealed exercise", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const state = quizState({ exercise: { id: "abc", ticks: 1, revealed: true, answered: false } });
    const next = await submitEntry(state, api, "12.3");
    expect(api.submitAnswer).not.toHaveBeenCalled();
    expect(next.feedbackTone).toBe("info");
  });

  it("refuses to grade twice", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const state = quizState({ exercise: { id: "abc", ticks: 1, revealed: false, answered: true } });
    const next = await submitEntry(state, api, "12.3");
    expect(api.submitAnswer).not.toHaveBeenCalled();
    expect(next.feedback).toBe("This question is done — ask for a new one.");
  });

  it("keeps the entry and offers retry when the network fails", async () => {
    const api = { submitAnswer: vi.fn().mockRejectedValue(new TypeError("fetch failed")) };
    const state = quizState({ feedback: "earlier note", feedbackTone: "info" });
    const next = await submitEntry(state, api, "12.3");
    expect(next.offerRetry).toBe(true);
    expect(next.busy).toBe(false);
    expect(next.feedback).toBe("earlier note");
    expect(next.exercise?.answered).toBe(false);
  });

  it("treats an already-answered error as a spent question", async () => {
    const api = {
      submitAnswer: vi
        .fn()
        .mockRejectedValue(new ApiError("already_answered", "exercise already answered", 409)),
    };
    const next = await submitEntry(quizState(), api, "12.3");
    expect(next.exercise?.answered).toBe(true);
    expect(next.offerNext).toBe(true);
    expect(next.feedbackTone).toBe("info");
  });

  it("keeps the attempt on a server-side parse rejection", async () => {
    const api = {
      submitAnswer: vi
        .fn()
        .mockRejectedValue(new ApiError("malformed_input", "unreadable", 400)),
    };
    const next = await submitEntry(quizState(), api, "7.5");
    expect(next.exercise?.answered).toBe(false);
    expect(next.feedbackTone).toBe("info");
    expect(next.offerRetry).toBe(false);
  });

  it("does nothing outside quiz mode", async () => {
    const api = apiReturning({ verdict: "correct", message: "Well done" });
    const explore = initialState();
    expect(await submitEntry(explore, api, "12.3")).toBe(explore);
    expect(api.submitAnswer).not.toHaveBeenCalled();
  });
});

describe("revealDuringQuiz", () => {
  it("voids the open exercise and says so", () => {
    const next = revealDuringQuiz(quizState());
    expect(next.showReading).toBe(true);
    expect(next.exercise?.revealed).toBe(true);
    expect(next.feedback).toBe(
      "Reading shown — this question no longer counts. Ask for a new one.",
    );
  });

  it("leaves an answered exercise's verdict on screen", () => {
    const state = quizState({
      feedback: "Well done",
      feedbackTone: "ok",
      exercise: { id: "abc", ticks: 1, revealed: false, answered: true },
    });
    const next = revealDuringQuiz(state);
    expect(next.feedback).toBe("Well done");
    expect(next.feedbackTone).toBe("ok");
    expect(next.exercise?.revealed).toBe(true);
  });

  it("simply shows the reading outside a quiz", () => {
    const next = revealDuringQuiz(initialState());
    expect(next.showReading).toBe(true);
    expect(next.exercise).toBeNull();
  });
});
