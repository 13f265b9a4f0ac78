/** Page controller: wires the lab page's controls to the state machine,
 * the SVG stage, and the grading API.
 *
 * The bundle carries a copy of every instrument template so the exported,
 * double-click-a-file bundle works without a server (file:// pages cannot
 * fetch).  When a server is reachable its template wins.
 */

import { ApiError, LabApi } from "./api";
import { readingText, ticksFromTransform, unitSymbol } from "./reading";
import { renderStage } from "./render";
import {
  dragTo,
  initialState,
  resetView,
  revealDuringQuiz,
  submitEntry,
  ViewState,
} from "./state";
import embeddedTemplates from "./templates.gen.json";
import type { LabConfig, SpecDoc, StatsDoc, TemplateDoc } from "./types";

const EMBEDDED = embeddedTemplates as unknown as Record<string, TemplateDoc>;

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`lab page is missing #${id}`);
  }
  return node as T;
}

function readConfig(): LabConfig | null {
  const config = (window as Window & { VMLAB_CONFIG?: LabConfig }).VMLAB_CONFIG;
  if (!config || typeof config.kind !== "string") {
    return null;
  }
  return config;
}

async function loadTemplate(config: LabConfig, api: LabApi | null): Promise<TemplateDoc> {
  if (api !== null) {
    try {
      return await api.getTemplate(config.kind);
    } catch {
      // Server unreachable; the embedded copy keeps the explore mode alive.
    }
  } else if (config.templateUrl) {
    try {
      const response = await fetch(config.templateUrl);
      if (response.ok) {
        return (await response.json()) as TemplateDoc;
      }
    } catch {
      // file:// blocks fetch entirely — expected for the exported bundle.
    }
  }
  const embedded = EMBEDDED[config.kind];
  if (embedded === undefined) {
    throw new Error(`no template for instrument kind ${config.kind}`);
  }
  return embedded;
}

class LabController {
  private state: ViewState = initialState();
  private session: Promise<string> | null = null;
  private readonly meta: SpecDoc;

  constructor(
    private readonly config: LabConfig,
    private readonly template: TemplateDoc,
    private readonly api: LabApi | null,
  ) {
    this.meta = template.metadata;
  }

  private readonly stage = byId<HTMLDivElement>("stage");
  private readonly modeExplore = byId<HTMLButtonElement>("mode-explore");
  private readonly modeQuiz = byId<HTMLButtonElement>("mode-quiz");
  private readonly showReading = byId<HTMLInputElement>("show-reading");
  private readonly resetButton = byId<HTMLButtonElement>("reset");
  private readonly readingLine = byId<HTMLElement>("reading-line");
  private readonly quizPanel = byId<HTMLDivElement>("quiz-panel");
  private readonly quizPrompt = byId<HTMLParagraphElement>("quiz-prompt");
  private readonly answerField = byId<HTMLInputElement>("answer");
  private readonly submitButton = byId<HTMLButtonElement>("submit");
  private readonly nextButton = byId<HTMLButtonElement>("next");
  private readonly feedback = byId<HTMLParagraphElement>("feedback");
  private readonly score = byId<HTMLElement>("score");

  start(): void {
    if (this.api === null) {
      this.modeQuiz.disabled = true;
      this.modeQuiz.title = "Quiz needs a running lab server.";
    }
    this.bindStage();
    this.modeExplore.addEventListener("click", () => this.switchMode("explore"));
    this.modeQuiz.addEventListener("click", () => this.switchMode("quiz"));
    this.showReading.addEventListener("change", () => this.onShowReading());
    this.resetButton.addEventListener("click", () => this.onReset());
    this.submitButton.addEventListener("click", () => void this.onSubmit());
    this.nextButton.addEventListener("click", () => void this.onNext());
    this.answerField.addEventListener("keydown", (event) => {
      if (event.key === "Enter") {
        event.preventDefault();
        void this.onSubmit();
      }
    });
    this.render();
  }

  // -- stage interaction ---------------------------------------------

  private bindStage(): void {
    let dragStartX = 0;
    let dragStartTicks = 0;
    let dragScale = 1;
    let dragging = false;

    this.stage.addEventListener("pointerdown", (event) => {
      if (this.state.mode !== "explore") {
        return;
      }
      const svg = this.stage.querySelector("svg");
      if (svg === null) {
        return;
      }
      dragging = true;
      dragStartX = event.clientX;
      dragStartTicks = this.state.ticks;
      const shown = svg.getBoundingClientRect().width;
      dragScale = shown > 0 ? svg.viewBox.baseVal.width / shown : 1;
      this.stage.setPointerCapture(event.pointerId);
      event.preventDefault();
    });
    this.stage.addEventListener("pointermove", (event) => {
      if (!dragging) {
        return;
      }
      const delta = (event.clientX - dragStartX) * dragScale;
      const ticks = dragTo(dragStartTicks, delta, this.meta.range_max_ticks);
      if (ticks !== this.state.ticks) {
        this.state = { ...this.state, ticks };
        this.render();
      }
    });
    const endDrag = (event: PointerEvent) => {
      if (dragging) {
        dragging = false;
        this.stage.releasePointerCapture(event.pointerId);
      }
    };
    this.stage.addEventListener("pointerup", endDrag);
    this.stage.addEventListener("pointercancel", endDrag);

    this.stage.tabIndex = 0;
    this.stage.addEventListener("keydown", (event) => {
      if (this.state.mode !== "explore") {
        return;
      }
      const step =
        event.key === "ArrowRight" ? 1 : event.key === "ArrowLeft" ? -1 : 0;
      if (step === 0) {
        return;
      }
      const scaled = event.shiftKey ? step * this.meta.main_division_ticks : step;
      const ticks = Math.min(
        Math.max(this.state.ticks + scaled, 0),
        this.meta.range_max_ticks,
      );
      if (ticks !== this.state.ticks) {
        this.state = { ...this.state, ticks };
        this.render();
      }
      event.preventDefault();
    });
  }

  // -- control handlers ------------------------------------------------

  private switchMode(mode: "explore" | "quiz"): void {
    if (this.state.mode === mode) {
      return;
    }
    if (mode === "quiz" && this.api === null) {
      return;
    }
    this.state = {
      ...this.state,
      mode,
      showReading: false,
      feedback: "",
      feedbackTone: "",
      offerNext: false,
      offerRetry: false,
    };
    this.answerField.value = "";
    this.render();
    if (mode === "quiz" && this.state.exercise === null) {
      void this.onNext();
    }
  }

  private onShowReading(): void {
    if (this.showReading.checked && this.state.mode === "quiz") {
      this.state = revealDuringQuiz(this.state);
    } else {
      this.state = { ...this.state, showReading: this.showReading.checked };
    }
    this.render();
  }

  private onReset(): void {
    this.state = resetView(this.state);
    this.answerField.value = "";
    this.render();
  }

  private async onSubmit(): Promise<void> {
    const api = this.api;
    const exercise = this.state.exercise;
    if (api === null || exercise === null) {
      return;
    }
    const sessionId = await this.sessionId();
    if (sessionId === null) {
      this.state = { ...this.state, feedback: OFFLINE_NOTE, feedbackTone: "info", offerRetry: true };
      this.render();
      return;
    }
    this.state = await submitEntry(
      this.state,
      { submitAnswer: (id, text) => api.submitAnswer(sessionId, id, text) },
      this.answerField.value,
    );
    this.render();
    if (this.state.exercise?.answered) {
      await this.refreshScore(api, sessionId);
    }
  }

  private async onNext(): Promise<void> {
    const api = this.api;
    if (api === null || this.state.busy) {
      return;
    }
    this.state = { ...this.state, busy: true, feedback: "Fetching a question…", feedbackTone: "info" };
    this.render();
    try {
      const sessionId = await this.sessionId();
      if (sessionId === null) {
        throw new Error("no session");
      }
      const issued = await api.issueExercise(sessionId, this.config.kind);
      const ticks = ticksFromTransform(this.meta, issued.transform);
      this.state = {
        ...this.state,
        busy: false,
        ticks,
        showReading: false,
        feedback: "",
        feedbackTone: "",
        offerNext: false,
        offerRetry: false,
        exercise: { id: issued.exercise_id, ticks, revealed: false, answered: false },
      };
      this.answerField.value = "";
      this.quizPrompt.textContent =
        `Read the ${this.meta.display_name.toLowerCase()} and enter the value in ` +
        `${unitSymbol(this.meta)}.`;
    } catch (error) {
      this.session = null;
      this.state = {
        ...this.state,
        busy: false,
        feedback: error instanceof ApiError ? error.message : OFFLINE_NOTE,
        feedbackTone: "info",
        offerRetry: true,
      };
    }
    this.render();
  }

  private sessionId(): Promise<string | null> {
    if (this.api === null) {
      return Promise.resolve(null);
    }
    if (this.session === null) {
      this.session = this.api.createSession();
    }
    return this.session.catch(() => {
      this.session = null;
      return null;
    });
  }

  private async refreshScore(api: LabApi, sessionId: string): Promise<void> {
    let stats: StatsDoc;
    try {
      stats = await api.getStats(sessionId);
    } catch {
      return; // the verdict already rendered; the tally can wait
    }
    this.score.textContent = "";
    const addRow = (label: string, correct: number, attempts: number) => {
      const dt = document.createElement("dt");
      dt.textContent = label;
      const dd = document.createElement("dd");
      dd.textContent = `${correct}/${attempts}`;
      this.score.append(dt, dd);
    };
    addRow("overall", stats.overall.correct, stats.overall.attempts);
    for (const [kind, block] of Object.entries(stats.per_kind)) {
      addRow(kind.replace(/_/g, " "), block.correct, block.attempts);
    }
  }

  // -- view --------------------------------------------------------------

  private render(): void {
    const s = this.state;
    this.modeExplore.classList.toggle("active", s.mode === "explore");
    this.modeQuiz.classList.toggle("active", s.mode === "quiz");
    this.quizPanel.hidden = s.mode !== "quiz";
    this.showReading.checked = s.showReading;
    this.readingLine.textContent = s.showReading ? readingText(this.meta, s.ticks) : "";
    this.feedback.textContent = s.feedback;
    this.feedback.className = s.feedbackTone ? `feedback ${s.feedbackTone}` : "feedback";
    this.submitButton.disabled =
      s.mode !== "quiz" ||
      s.busy ||
      s.exercise === null ||
      s.exercise.answered ||
      s.exercise.revealed;
    this.nextButton.disabled = s.mode !== "quiz" || s.busy;
    this.answerField.disabled = this.submitButton.disabled;
    renderStage(this.stage, {
      template: this.template,
      ticks: s.ticks,
      showReading: s.showReading,
    });
  }
}

const OFFLINE_NOTE = "Could not reach the lab server — check the connection and try again.";

async function boot(): Promise<void> {
  const config = readConfig();
  if (config === null) {
    return; // not a lab page (home, safety): the bundle is a no-op
  }
  const api = config.apiBase ? new LabApi(config.apiBase) : null;
  const template = await loadTemplate(config, api);
  new LabController(config, template, api).start();
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", () => void boot());
} else {
  void boot();
}
