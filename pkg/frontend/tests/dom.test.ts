/** Boots the real page controller against a jsdom copy of the lab page
 * markup (kept in sync with the served page) and walks both modes:
 * explore (drag-free interactions, reveal, reset) and quiz against a
 * scripted fetch.
 */
// @vitest-environment jsdom

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import templates from "../src/templates.gen.json";
import type { LabConfig, TemplateDoc } from "../src/types";

const CALIPER = (templates as unknown as Record<string, TemplateDoc>).caliper!;

// Mirror of the lab page body the server renders (same ids and nesting).
const LAB_MARKUP = `
<div id="lab" data-kind="caliper">
  <div class="mode-row">
    <button id="mode-explore" class="mode active" type="button">Explore</button>
    <button id="mode-quiz" class="mode" type="button">Quiz</button>
  </div>
  <div id="stage" class="stage" aria-label="Vernier caliper scales"></div>
  <div class="controls">
    <label><input type="checkbox" id="show-reading"> Show reading</label>
    <button id="reset" type="button">Reset</button>
    <span id="reading-line" class="reading-line"></span>
  </div>
  <div id="quiz-panel" class="quiz-panel" hidden>
    <p id="quiz-prompt">Set up a question to begin.</p>
    <label>Your reading:
      <input id="answer" type="text" autocomplete="off" spellcheck="false">
    </label>
    <button id="submit" type="button">Submit</button>
    <button id="next" type="button">New question</button>
    <p id="feedback" class="feedback" role="status"></p>
    <dl id="score" class="score"></dl>
  </div>
</div>`;

function setConfig(config: LabConfig): void {
  (window as Window & { VMLAB_CONFIG?: LabConfig }).VMLAB_CONFIG = config;
}

async function bootPage(): Promise<void> {
  vi.resetModules();
  await import("../src/main");
  await flush();
}

/** Let pending promise chains (template load, API calls) settle. */
async function flush(): Promise<void> {
  for (let i = 0; i < 10; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function click(id: string): void {
  el<HTMLButtonElement>(id).click();
}

beforeEach(() => {
  document.body.innerHTML = LAB_MARKUP;
});

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

describe("offline page", () => {
  beforeEach(async () => {
    setConfig({ kind: "caliper", offline: true, apiBase: null, templateUrl: null });
    await bootPage();
  });

  it("renders the stage from the embedded template", () => {
    const svg = el<HTMLDivElement>("stage").querySelector("svg");
    expect(svg).not.toBeNull();
    // The magnifier culls marks outside the viewport, so only the window's
    // worth of rule marks plus the vernier is in the document at tick 0.
    expect(svg!.querySelectorAll("line").length).toBeGreaterThan(25);
    expect(svg!.textContent).toContain("0");
  });

  it("disables quiz without a server", () => {
    expect(el<HTMLButtonElement>("mode-quiz").disabled).toBe(true);
    click("mode-quiz");
    expect(el<HTMLDivElement>("quiz-panel").hidden).toBe(true);
  });

  it("shows and hides the worked reading", () => {
    const checkbox = el<HTMLInputElement>("show-reading");
    checkbox.checked = true;
    checkbox.dispatchEvent(new Event("change"));
    expect(el("reading-line").textContent).toBe(
      "main 0 mm + vernier 0 × 0.1 mm = 0.0 mm",
    );
    checkbox.checked = false;
    checkbox.dispatchEvent(new Event("change"));
    expect(el("reading-line").textContent).toBe("");
  });

  it("steps one tick per arrow key and resets to zero", () => {
    const stage = el<HTMLDivElement>("stage");
    const checkbox = el<HTMLInputElement>("show-reading");
    checkbox.checked = true;
    checkbox.dispatchEvent(new Event("change"));
    for (let i = 0; i < 3; i += 1) {
      stage.dispatchEvent(new KeyboardEvent("keydown", { key: "ArrowRight" }));
    }
    expect(el("reading-line").textContent).toBe(
      "main 0 mm + vernier 3 × 0.1 mm = 0.3 mm",
    );
    stage.dispatchEvent(new KeyboardEvent("keydown", { key: "ArrowLeft" }));
    expect(el("reading-line").textContent).toBe(
      "main 0 mm + vernier 2 × 0.1 mm = 0.2 mm",
    );
    click("reset");
    expect(el<HTMLInputElement>("show-reading").checked).toBe(false);
    expect(el("reading-line").textContent).toBe("");
  });
});

describe("online quiz", () => {
  const issued = {
    exercise_id: "qqqq",
    kind: "caliper",
    transform: { kind: "translation", unit: "mm", amount: { num: 494, den: 5 } },
  };

  function scriptedFetch(): typeof fetch {
    return vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
      const url = String(input);
      const method = init?.method ?? "GET";
      const reply = (doc: unknown, status = 200) =>
        new Response(JSON.stringify(doc), {
          status,
          headers: { "Content-Type": "application/json" },
        });
      if (url.endsWith("/instruments/caliper/template")) return reply(CALIPER);
      if (method === "POST" && url.endsWith("/sessions")) {
        return reply({ session_id: "ssss" });
      }
      if (method === "POST" && url.endsWith("/sessions/ssss/exercises")) {
        return reply(issued);
      }
      if (method === "POST" && url.endsWith("/exercises/qqqq/answer")) {
        const body = JSON.parse(String(init?.body)) as { text: string };
        return body.text.trim() === "98.8"
          ? reply({ verdict: "correct", message: "Well done" })
          : reply({ verdict: "incorrect", message: "Sorry, wrong answer!", correct_value: "98.8" });
      }
      if (url.endsWith("/sessions/ssss/stats")) {
        return reply({
          session_id: "ssss",
          overall: { attempts: 1, correct: 1, accuracy: 1.0 },
          per_kind: { caliper: { attempts: 1, correct: 1, accuracy: 1.0 } },
        });
      }
      return reply({ code: "not_found", message: `unexpected ${method} ${url}` }, 404);
    }) as unknown as typeof fetch;
  }

  beforeEach(async () => {
    vi.stubGlobal("fetch", scriptedFetch());
    setConfig({ kind: "caliper", offline: false, apiBase: "/api/v1", templateUrl: null });
    await bootPage();
  });

  it("issues a question on entering quiz mode and grades the entry", async () => {
    click("mode-quiz");
    await flush();
    expect(el<HTMLDivElement>("quiz-panel").hidden).toBe(false);
    expect(el("quiz-prompt").textContent).toBe(
      "Read the vernier caliper and enter the value in mm.",
    );
    expect(el("reading-line").textContent).toBe("");

    const answer = el<HTMLInputElement>("answer");
    answer.value = "98.8";
    click("submit");
    await flush();

    expect(el("feedback").textContent).toBe("Well done");
    expect(el("feedback").className).toBe("feedback ok");
    expect(el<HTMLButtonElement>("submit").disabled).toBe(true);
    expect(el("score").textContent).toContain("overall");
    expect(el("score").textContent).toContain("1/1");
  });

  it("keeps malformed text local and the attempt alive", async () => {
    click("mode-quiz");
    await flush();
    const answer = el<HTMLInputElement>("answer");
    answer.value = "98,8";
    click("submit");
    await flush();
    expect(el("feedback").textContent).toBe("Use a decimal point, not a comma.");
    expect(el<HTMLButtonElement>("submit").disabled).toBe(false);
  });

  it("voids the question when the reading is revealed mid-quiz", async () => {
    click("mode-quiz");
    await flush();
    const checkbox = el<HTMLInputElement>("show-reading");
    checkbox.checked = true;
    checkbox.dispatchEvent(new Event("change"));
    expect(el("reading-line").textContent).toBe(
      "main 98 mm + vernier 8 × 0.1 mm = 98.8 mm",
    );
    expect(el<HTMLButtonElement>("submit").disabled).toBe(true);
    expect(el("feedback").textContent).toContain("no longer counts");
  });

  it("fetches a fresh question on demand", async () => {
    click("mode-quiz");
    await flush();
    el<HTMLInputElement>("answer").value = "11.1";
    click("submit");
    await flush();
    expect(el("feedback").textContent).toBe("Sorry, wrong answer!");
    expect(el("feedback").className).toBe("feedback bad");
    click("next");
    await flush();
    expect(el("feedback").textContent).toBe("");
    expect(el<HTMLInputElement>("answer").value).toBe("");
    expect(el<HTMLButtonElement>("submit").disabled).toBe(false);
  });
});
