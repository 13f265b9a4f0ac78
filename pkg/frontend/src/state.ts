/** Interaction logic, kept free of the DOM so it can be unit-tested.
 *
 * Explore mode owns a local tick position the student drags; quiz mode pins
 * the scales to a server-issued transform and the server alone grades.  The
 * one local check is a parse precheck that catches obviously malformed text
 * before it costs a round trip — the server stays the grader of record.
 */

import { ApiError } from "./api";
import type { GradeDoc } from "./types";

export const DRAG_PX_PER_TICK = 4.4;

export interface ExerciseRef {
  id: string;
  /** Tick position recovered from the issued transform — used only to pose
   * the scales and to reveal the reading when the student gives up. */
  ticks: number;
  revealed: boolean;
  answered: boolean;
}

export interface ViewState {
  mode: "explore" | "quiz";
  ticks: number;
  showReading: boolean;
  feedback: string;
  feedbackTone: "ok" | "bad" | "info" | "";
  exercise: ExerciseRef | null;
  busy: boolean;
  offerNext: boolean;
  offerRetry: boolean;
}

export function initialState(): ViewState {
  return {
    mode: "explore",
    ticks: 0,
    showReading: false,
    feedback: "",
    feedbackTone: "",
    exercise: null,
    busy: false,
    offerNext: false,
    offerRetry: false,
  };
}

/** Drag by a pixel delta from the position where the drag started. */
export function dragTo(startTicks: number, pixelDelta: number, rangeMax: number): number {
  const moved = startTicks + pixelDelta / DRAG_PX_PER_TICK;
  return Math.min(Math.max(Math.round(moved), 0), rangeMax);
}

/** Reset: explore returns to the initial view; quiz only clears the entry
 * (the hidden target is server state and unaffected). */
export function resetView(state: ViewState): ViewState {
  if (state.mode === "quiz") {
    return { ...state };
  }
  return {
    ...state,
    ticks: 0,
    showReading: false,
    feedback: "",
    feedbackTone: "",
  };
}

const PLAIN_DECIMAL = /^\s*[0-9]+(\.[0-9]+)?\s*$/;

/** Local precheck mirroring the server's answer grammar.  Returns a hint
 * string for malformed text, or null when the text is worth sending. */
export function parseHint(text: string): string | null {
  if (PLAIN_DECIMAL.test(text)) return null;
  if (text.includes(",")) return "Use a decimal point, not a comma.";
  if (text.trim() === "") return "Type the reading first.";
  return "Enter a plain decimal number, like 12.3.";
}

export interface SubmitApi {
  submitAnswer(exerciseId: string, text: string): Promise<GradeDoc>;
}

/** Grade the entry: precheck locally, send once, show the message verbatim.
 * At most one request is in flight; failures keep the entry and offer retry. */
export async function submitEntry(
  state: ViewState,
  api: SubmitApi,
  text: string,
): Promise<ViewState> {
  if (state.mode !== "quiz" || state.exercise === null || state.busy) {
    return state;
  }
  if (state.exercise.answered) {
    return {
      ...state,
      feedback: "This question is done — ask for a new one.",
      feedbackTone: "info",
    };
  }
  if (state.exercise.revealed) {
    return {
      ...state,
      feedback: "Reading was shown — ask for a new question to be graded.",
      feedbackTone: "info",
    };
  }
  const hint = parseHint(text);
  if (hint !== null) {
    return { ...state, feedback: hint, feedbackTone: "info" };
  }
  const pending: ViewState = { ...state, busy: true, offerRetry: false };
  try {
    const graded = await api.submitAnswer(state.exercise.id, text);
    return {
      ...pending,
      busy: false,
      feedback: graded.message,
      feedbackTone: graded.verdict === "correct" ? "ok" : "bad",
      offerNext: true,
      exercise: { ...state.exercise, answered: true },
    };
  } catch (error) {
    if (error instanceof ApiError && error.code === "already_answered") {
      // Another tab (or a retried request) got there first; the verdict is
      // spent either way.
      return {
        ...pending,
        busy: false,
        feedback: "This question was already answered.",
        feedbackTone: "info",
        offerNext: true,
        exercise: { ...state.exercise, answered: true },
      };
    }
    if (error instanceof ApiError && error.code === "malformed_input") {
      // Server-side parse rejection does not spend the attempt.
      return {
        ...pending,
        busy: false,
        feedback: "That doesn't read as a number — try again.",
        feedbackTone: "info",
      };
    }
    return {
      ...pending,
      busy: false,
      feedback: pending.feedback,
      offerRetry: true,
    };
  }
}

/** Turning on show-reading during a quiz reveals the answer and voids the
 * exercise: it can still be studied, but no longer graded. */
export function revealDuringQuiz(state: ViewState): ViewState {
  if (state.mode !== "quiz" || state.exercise === null) {
    return { ...state, showReading: true };
  }
  return {
    ...state,
    showReading: true,
    exercise: { ...state.exercise, revealed: true },
    feedback: state.exercise.answered
      ? state.feedback
      : "Reading shown — this question no longer counts. Ask for a new one.",
    feedbackTone: state.exercise.answered ? state.feedbackTone : "info",
    offerNext: true,
  };
}
